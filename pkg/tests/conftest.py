# Session fixtures shared by the test modules. The group table and the
# plane model take a while to build, so each is built once per session.

import os.path

import pytest

from lib.Devissage import Fixtures
from lib.Devissage.DevissageMaster import DevissageMaster
from lib.Devissage.Fibration.FibrationCurve import twisted_fibration
from lib.Devissage.Fibration.PlaneModel import torsion_plane_model
from lib.Devissage.Group.Classes import conjugacy_classes
from lib.Devissage.Group.SU3 import enumerate_su3

DATA = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "data")


@pytest.fixture(scope="session")
def data_path():
    return DATA


@pytest.fixture(scope="session")
def fibration():
    return twisted_fibration()


@pytest.fixture(scope="session")
def plane_model(fibration):
    return torsion_plane_model(fibration, 3)


@pytest.fixture(scope="session")
def group_table():
    return enumerate_su3()


@pytest.fixture(scope="session")
def classes(group_table):
    return conjugacy_classes(group_table)


@pytest.fixture(scope="session")
def f28():
    return Fixtures.load_f28(os.path.join(DATA, Fixtures.F28))


@pytest.fixture(scope="session")
def shared_tables():
    return {}


def make_config(tmp_path, **overrides):
    config = {
        "config": {
            "debugLevel": 0,
            "dataPath": DATA,
            "settingsPath": str(tmp_path),
            "threads": 2,
            "bigPrimes": False,
        },
        "logging": {"Console": {"enabled": False}},
        "verify": {},
    }
    config["config"].update(overrides)
    return config


@pytest.fixture
def master(tmp_path, shared_tables):
    m = DevissageMaster(make_config(tmp_path))
    # Tables are read-only once built, so every test master shares them
    m.tables = shared_tables
    return m
