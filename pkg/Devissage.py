#! /usr/bin/python3

################################################################################
# Devissage: torsion covers of an elliptic fibration, their local monodromy,
# and Frobenius classes in SU3(F9) for the degree-28 polynomial.
#
# Usage examples:
#   ./Devissage.py verify all
#   ./Devissage.py genus --ell 5
#   ./Devissage.py frobenius --p 10^1000+453 --strict
#
# Configuration is read from --config, /etc/devissage/config.json or
# ./config.json, in that order. Reports go to standard output, logging to
# standard error.
################################################################################

import os
import sys

from lib.Devissage.Driver import main

# Enable support for Python Visual Studio Debugger
if "DEBUG_SECRET" in os.environ:
    import ptvsd

    ptvsd.enable_attach(os.environ["DEBUG_SECRET"])
    ptvsd.wait_for_attach()

if __name__ == "__main__":
    sys.exit(main(sys.argv[1:]))
