# Command-line surface of Devissage: configuration loading, the module
# instantiator, the verification suite and the per-command handlers.

import argparse
import importlib
import os.path
import re
import sys
import traceback

import commentjson
import mpmath
from termcolor import colored

from lib.Devissage import Fixtures
from lib.Devissage.Algebra.Ddf import format_cycle_type
from lib.Devissage.Algebra.NumberTheory import is_prime
from lib.Devissage.Algebra.PolyText import format_bipoly, parse_coefficient_list
from lib.Devissage.Background import run_tasks
from lib.Devissage.DevissageMaster import DevissageMaster
from lib.Devissage.Errors import (
    BadInputError,
    CompositeModulusError,
    DevissageError,
    FixtureError,
    RamifiedPrimeError,
)
from lib.Devissage.Fibration.BadLocus import bad_fibres
from lib.Devissage.Fibration.FibrationCurve import TWIST_POLY
from lib.Devissage.Fibration.PlaneModel import torsion_plane_model
from lib.Devissage.Frobenius.Dokchitser import (
    DEFAULT_PRECISION,
    DokContext,
    build_resolvents_auto,
    dok_trace_invariant,
    match_resolvent,
    ordered_roots,
)
from lib.Devissage.Frobenius.Hecke import HeckeEigenvalue
from lib.Devissage.Group.Classes import export_classes
from lib.Devissage.Group.F9 import format_f9
from lib.Devissage.Group.SU3 import ScalarSubgroup, orbit_degrees
from lib.Devissage.Monodromy.Genus import cover_genus
from lib.Devissage.Monodromy.Kodaira import kodaira_table
from lib.Devissage.Render import Reports
from lib.Devissage.VerificationReport import VerificationReport

# Define available modules for the instantiator
# All listed modules will be loaded at startup, Logging modules first.
# The Verify modules run in this order inside the verification suite.
modules_available = [
    "Logging.ConsoleLogging",
    "Logging.FileLogging",
    "Logging.CSVLogging",
    "Verify.ModelChecks",
    "Verify.FibrationChecks",
    "Verify.KodairaChecks",
    "Verify.GenusChecks",
    "Verify.GroupChecks",
    "Verify.F28Checks",
    "Verify.FrobeniusChecks",
    "Verify.DokChecks",
    "Verify.PropertyChecks",
]

CONFIG_LOCATIONS = ["/etc/devissage/config.json", "config.json"]
PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))

DEFAULT_CONFIG = {
    "config": {
        "debugLevel": 1,
        "displayMilliseconds": False,
        "dataPath": "data",
        "settingsPath": ".",
        "threads": 0,
        "resolventPrecision": DEFAULT_PRECISION,
        "bigPrimes": True,
        "f28SweepPrimes": 100,
        "irreducibilityBound": 500,
        "fiberChecks": 20,
        "randomSeed": 0,
    },
    "logging": {"Console": {"enabled": True}},
    "verify": {},
}

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_INPUT = 2
EXIT_AMBIGUOUS = 3


##########################
# Load Configuration File


def find_config(path=None):
    if path:
        if not os.path.isfile(path):
            raise FixtureError(path, "configuration file not found")
        return path
    for candidate in CONFIG_LOCATIONS:
        if os.path.isfile(candidate):
            return candidate
    return None


def load_config(path=None):
    config = {key: dict(value) for key, value in DEFAULT_CONFIG.items()}
    fileName = find_config(path)
    if fileName:
        with open(fileName, "r") as jsonconfig:
            try:
                loaded = commentjson.load(jsonconfig)
            except Exception as e:
                raise FixtureError(fileName, "unparseable configuration: %s" % e)
        for key, value in loaded.items():
            if isinstance(value, dict) and isinstance(config.get(key), dict):
                config[key].update(value)
            else:
                config[key] = value

    # A fresh checkout keeps its fixtures next to lib/
    dataPath = config["config"]["dataPath"]
    if not os.path.isabs(dataPath) and not os.path.isdir(dataPath):
        config["config"]["dataPath"] = os.path.join(PROJECT_ROOT, dataPath)
    return config


def load_modules(master):
    # Instantiate each module listed in modules_available. Modules disabled
    # in the configuration release themselves from the registry.
    for module in modules_available:
        modulename = []
        if str(module).find(".") != -1:
            modulename = str(module).split(".")

        try:
            moduleref = importlib.import_module("lib.Devissage." + module)
            modclassref = getattr(moduleref, modulename[1])
            modinstance = modclassref(master)

            # Register the new module with master class, so every other module can
            # interact with it
            master.registerModule({"name": modulename[1], "ref": modinstance, "type": modulename[0]})
        except ModuleNotFoundError as e:
            master.debugLog(
                1,
                "Devissage",
                colored("ModuleNotFoundError", "red")
                + ": "
                + str(e)
                + ", when importing module "
                + colored(module, "red")
                + ", not using "
                + colored(module, "red"),
            )
        except ImportError as e:
            master.debugLog(
                1,
                "Devissage",
                colored("ImportError", "red")
                + ": "
                + str(e)
                + ", when importing "
                + colored(module, "red")
                + ", not using "
                + colored(module, "red"),
            )


def verify_sections():
    return [m.split(".")[1] for m in modules_available if m.startswith("Verify.")]


def run_verification_suite(master, selection="all"):
    checkers = [master.getModuleByName(name) for name in verify_sections()]
    checkers = [c for c in checkers if c is not None]
    known = {c.section for c in checkers}
    if selection != "all" and selection not in known:
        raise BadInputError(
            "unknown verification section %r, expected all or one of %s"
            % (selection, ", ".join(sorted(known)))
        )

    report = VerificationReport(selection)
    for checker in checkers:
        if selection not in ("all", checker.section):
            master.debugLog(8, "Verify", "Skipping section %s" % checker.section)
            continue
        master.debugLog(10, "Verify", "Entering section %s" % checker.section)
        checker.runChecks(report)
        master.debugLog(10, "Verify", "Leaving section %s" % checker.section)

    master.recordVerification(report)
    master.saveSettings()
    return report


##############################
#
# Argument parsing
#

_POWER_FORM = re.compile(r"(\d+)\^(\d+)([+-]\d+)?")


def parse_integer(token):
    # Decimal integers, or b^e+k for the thousand-digit primes
    token = token.strip().replace(" ", "")
    m = _POWER_FORM.fullmatch(token)
    if m:
        value = int(m.group(1)) ** int(m.group(2))
        return value + int(m.group(3) or 0)
    try:
        return int(token)
    except ValueError:
        raise BadInputError("not an integer: %r" % token)


def parse_generators(text):
    generators = []
    for part in text.split(";"):
        try:
            generators.append(tuple(int(x) for x in part.split(",")))
        except ValueError:
            raise BadInputError("bad permutation %r, expected comma separated images" % part)
    return generators


def parse_coefficients(text):
    try:
        return parse_coefficient_list(text)
    except (ValueError, ZeroDivisionError) as e:
        raise BadInputError("bad coefficient list %r: %s" % (text, e))


def build_parser():
    parser = argparse.ArgumentParser(
        prog="Devissage", description="Torsion covers, monodromy and Frobenius classes"
    )
    parser.add_argument("--config", help="configuration file (commentjson)")
    parser.add_argument("--threads", type=int, help="worker threads, 0 for all cores")
    parser.add_argument("--debug-level", type=int, dest="debugLevel")
    parser.add_argument("--format", choices=Reports.FORMATS, default="text")
    parser.add_argument(
        "--no-timings", action="store_false", dest="timings", help="omit elapsed times"
    )
    commands = parser.add_subparsers(dest="command", required=True)

    model = commands.add_parser("model", help="plane model of the l-torsion cover")
    model.add_argument("action", choices=["build", "verify"])
    model.add_argument("--ell", type=int, default=3)
    model.add_argument("--output", help="write the model to this file")

    fibration = commands.add_parser("fibration", help="Weierstrass data and Kodaira table")
    fibration.add_argument("action", choices=["invariants", "kodaira"])
    fibration.add_argument("--ell", type=int, help="also count orbits on (Z/l)^2")

    genus = commands.add_parser("genus", help="genus of the l-torsion cover")
    genus.add_argument("--ell", type=int, required=True)

    group = commands.add_parser("group", help="SU3(F9) class table and orbits")
    group.add_argument("action", choices=["table", "orbits"])
    group.add_argument("--export", help="write the class table to this file")

    frobenius = commands.add_parser("frobenius", help="Frobenius classes from f28")
    target = frobenius.add_mutually_exclusive_group(required=True)
    target.add_argument("--p", help="a prime, decimal or b^e+k")
    target.add_argument("--batch", help="file with one prime per line, optionally 'p re im'")
    frobenius.add_argument("--strict", action="store_true", help="exit 3 on ambiguous reports")
    frobenius.add_argument("--classes", help="class table exported by 'group table --export'")

    dok = commands.add_parser("dok", help="resolvent engine")
    dok.add_argument("action", choices=["xp", "build", "classify", "roots"])
    dok.add_argument("--f", default="-2 0 0 1", help="coefficients of f, constant first")
    dok.add_argument("--h", default="0 0 1", help="coefficients of h, constant first")
    dok.add_argument("--generators", default="1,0,2;1,2,0", help="root permutations, ';' separated")
    dok.add_argument("--p", help="a prime")
    dok.add_argument("--resolvents", help="resolvent file, defaults to the toy fixture")
    dok.add_argument("--precision", type=int)
    dok.add_argument("--output", help="write the resolvent set to this file")

    verify = commands.add_parser("verify", help="run the verification suite")
    verify.add_argument("selection", nargs="?", default="all")
    return parser


##############################
#
# Commands
#


def emit(text):
    sys.stdout.write(text)


def cmd_model(master, args):
    if args.action == "verify":
        return cmd_verify(master, argparse.Namespace(selection="model", **vars(args)))
    if args.ell < 3 or not is_prime(args.ell):
        raise BadInputError("--ell must be an odd prime, got %d" % args.ell)
    model = master.getPlaneModel(args.ell) if args.ell == 3 else torsion_plane_model(
        master.getFibration(), args.ell
    )
    text = format_bipoly(
        model.poly,
        "plane model of the %d-torsion cover, bidegree %s" % (args.ell, model.bidegree),
    )
    if args.output:
        Fixtures.write_fixture(args.output, text)
        master.debugLog(1, "Devissage", "Wrote model to %s" % args.output)
    else:
        emit(text)
    return EXIT_OK


def cmd_fibration(master, args):
    E = master.getFibration()
    if args.action == "invariants":
        rows = [
            {"place": f.label(), "multiplicity": f.multiplicity, "split": f.split}
            for f in bad_fibres(E)
        ]
        emit(
            Reports.render_rows(
                "invariants.txt.j2",
                rows,
                ["place", "multiplicity", "split"],
                args.format,
                name=E.name or "fibration",
                a2=E.a2.format("λ"),
                a4=E.a4.format("λ"),
                a6=E.a6.format("λ"),
                c4=E.c4.format("λ"),
                c6=E.c6.format("λ"),
                discriminant=E.discriminant.format("λ"),
                j=str(E.j),
                twist=TWIST_POLY.format("λ"),
            )
        )
        return EXIT_OK

    rows = [r.asDict() for r in kodaira_table(E, args.ell)]
    fields = ["place", "valuations", "type", "monodromy", "orbits", "notes"]
    emit(Reports.render_rows("kodaira.txt.j2", rows, fields, args.format, ell=args.ell))
    return EXIT_OK


def cmd_genus(master, args):
    table = master.getTable("kodaira", lambda: kodaira_table(master.getFibration()))
    report = cover_genus([(r.place, r.kodairaType) for r in table], args.ell)
    rows = [
        {"place": place.label(), "type": str(t), "orbits": orbits, "contribution": contribution}
        for place, t, orbits, contribution in report.contributions
    ]
    emit(
        Reports.render_rows(
            "genus.txt.j2",
            rows,
            ["place", "type", "orbits", "contribution"],
            args.format,
            ell=report.ell,
            degree=report.degree,
            genus=report.genus,
            closedForm=report.closedForm,
            matches=report.matchesClosedForm,
        )
    )
    return EXIT_OK if report.matchesClosedForm else EXIT_MISMATCH


def cmd_group(master, args):
    table = master.getGroupTable()
    if args.action == "orbits":
        rows = []
        for K in ScalarSubgroup.chain():
            degrees = orbit_degrees(table, K)
            rows.append({"scalars": str(K), "degrees": degrees, "total": sum(degrees)})
        emit(Reports.render_rows("orbits.txt.j2", rows, ["scalars", "degrees", "total"], args.format))
        return EXIT_OK

    classes = master.getClasses()
    if args.export:
        Fixtures.write_fixture(args.export, export_classes(classes))
        master.debugLog(1, "Devissage", "Wrote %d classes to %s" % (len(classes), args.export))
    rows = [
        {
            "label": c.label,
            "size": c.size,
            "order": c.order,
            "trace": format_f9(c.trace),
            "isotropic": format_cycle_type(c.isotropicType),
            "nonisotropic": format_cycle_type(c.nonisotropicType),
        }
        for c in classes
    ]
    fields = ["label", "size", "order", "trace", "isotropic", "nonisotropic"]
    emit(Reports.render_rows("group.txt.j2", rows, fields, args.format))
    return EXIT_OK


def read_batch(path):
    # Lines hold a prime and optionally its a_p as 're im'; table rows qualify
    tasks = []
    text = Fixtures.read_fixture(path)
    for number, raw in enumerate(text.splitlines(), 1):
        fields = raw.split("#", 1)[0].split()
        if not fields:
            continue
        try:
            p = parse_integer(fields[0])
            expected = (int(fields[1]), int(fields[2])) if len(fields) >= 3 else None
        except (BadInputError, ValueError) as e:
            raise FixtureError(path, "line %d: %s" % (number, e))
        tasks.append({"p": p, "expected": expected})
    if not tasks:
        raise FixtureError(path, "no primes to classify")
    return tasks


def _prime_argument(p):
    # Ramified and composite inputs are the caller's mistake
    if p in (2, 3):
        raise BadInputError("p = %d is ramified" % p)
    if p < 2 or not is_prime(p):
        raise BadInputError("%d is not prime" % p)
    digits = len(str(p))
    if digits > 30:
        return "<%d-digit prime>" % digits
    return str(p)


def cmd_frobenius(master, args):
    if args.p is not None:
        tasks = [{"p": parse_integer(args.p), "expected": None}]
    else:
        tasks = read_batch(args.batch)
    for task in tasks:
        name = _prime_argument(task["p"])
        master.debugLog(10, "Devissage", "%s passes the BPSW probable prime test" % name)

    if args.classes:
        master.tables["classes"] = Fixtures.load_classes(args.classes)
    else:
        master.getClasses()
    master.getF28()

    results = run_tasks(master, "classify", [{"p": t["p"]} for t in tasks], args.threads)
    for result in results:
        if isinstance(result, (RamifiedPrimeError, CompositeModulusError)):
            raise BadInputError(str(result))
        if isinstance(result, Exception):
            raise result

    code = EXIT_OK
    for task, report in zip(tasks, results):
        master.logFrobeniusReport(report)
        if task["expected"] is not None:
            expected = HeckeEigenvalue(*task["expected"]).mod3
            if not report.contains(expected):
                master.debugLog(
                    1,
                    "Devissage",
                    colored("Mismatch", "red")
                    + ": p = %s, a_p mod 3 = %s not among candidates"
                    % (_prime_argument(report.p), format_f9(expected)),
                )
                code = EXIT_MISMATCH
    emit(Reports.render_frobenius_reports(results, args.format, args.timings))

    if code == EXIT_OK and args.strict and any(r.ambiguous for r in results):
        return EXIT_AMBIGUOUS
    return code


def cmd_dok(master, args):
    precision = args.precision or master.getConfig("resolventPrecision", DEFAULT_PRECISION)
    if args.action == "build":
        f = parse_coefficients(args.f)
        h = parse_coefficients(args.h)
        rs = build_resolvents_auto(f, parse_generators(args.generators), h, precision)
        text = rs.serialize()
        if args.output:
            Fixtures.write_fixture(args.output, text)
            master.debugLog(1, "Devissage", "Wrote resolvents to %s" % args.output)
        else:
            emit(text)
        return EXIT_OK

    if args.action == "roots":
        # Generator tuples index the roots in this order
        for i, r in enumerate(ordered_roots(parse_coefficients(args.f), precision)):
            emit("r_%d = %s\n" % (i, mpmath.nstr(r, 15)))
        return EXIT_OK

    if args.p is None:
        raise BadInputError("dok %s needs --p" % args.action)
    p = parse_integer(args.p)
    if p < 2 or not is_prime(p):
        raise BadInputError("%d is not prime" % p)
    if args.action == "xp":
        ctx = DokContext(parse_coefficients(args.f), parse_coefficients(args.h), precision)
        emit("x_%d = %d\n" % (p, dok_trace_invariant(ctx, p)))
        return EXIT_OK

    if args.resolvents:
        rs = Fixtures.load_resolvents(args.resolvents)
    else:
        rs = master.getResolventToy()
    ctx = DokContext(rs.f, rs.h, rs.precision)
    if p in rs.collisionPrimes:
        master.debugLog(1, "Devissage", colored("Warning", "yellow") + ": %d is a collision prime" % p)
    labels = match_resolvent(
        rs, ctx, p, warn=lambda msg: master.debugLog(1, "Devissage", colored("Warning", "yellow") + ": " + msg)
    )
    emit("p=%d classes={%s}\n" % (p, ",".join(labels)))
    if len(labels) > 1:
        return EXIT_AMBIGUOUS
    return EXIT_OK


def cmd_verify(master, args):
    report = run_verification_suite(master, args.selection)
    emit(Reports.render_verification_report(report, args.format, args.timings))
    return report.exitCode


COMMANDS = {
    "model": cmd_model,
    "fibration": cmd_fibration,
    "genus": cmd_genus,
    "group": cmd_group,
    "frobenius": cmd_frobenius,
    "dok": cmd_dok,
    "verify": cmd_verify,
}


def main(argv=None):
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        # argparse reports usage errors with status 2
        return e.code if isinstance(e.code, int) else EXIT_BAD_INPUT

    try:
        config = load_config(args.config)
    except FixtureError as e:
        print(colored("Error", "red") + ": " + str(e), file=sys.stderr)
        return EXIT_BAD_INPUT

    if args.threads is not None:
        config["config"]["threads"] = args.threads
    if args.debugLevel is not None:
        config["config"]["debugLevel"] = args.debugLevel

    master = DevissageMaster(config)
    load_modules(master)
    master.loadSettings()
    master.debugLog(11, "Devissage", "Devissage %s, command %s" % (master.version, args.command))

    try:
        return COMMANDS[args.command](master, args)
    except (FixtureError, BadInputError) as e:
        master.debugLog(1, "Devissage", colored("Error", "red") + ": " + str(e))
        return EXIT_BAD_INPUT
    except DevissageError as e:
        master.debugLog(1, "Devissage", colored(type(e).__name__, "red") + ": " + str(e))
        master.debugLog(11, "Devissage", traceback.format_exc())
        return EXIT_MISMATCH
