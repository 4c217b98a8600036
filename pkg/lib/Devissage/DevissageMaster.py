#! /usr/bin/python3

from datetime import datetime
import json
import os.path
import queue
from sys import modules, stderr
import threading
import time

from termcolor import colored

from lib.Devissage import Fixtures
from lib.Devissage.Fibration.FibrationCurve import twisted_fibration
from lib.Devissage.Fibration.PlaneModel import torsion_plane_model
from lib.Devissage.Group.Classes import conjugacy_classes
from lib.Devissage.Group.SU3 import enumerate_su3


class DevissageMaster:

    config = None
    debugLevel = 1
    version = "0.4.0"

    def __init__(self, config):
        self.config = config
        self.configConfig = config.setdefault("config", {})
        self.debugLevel = self.configConfig.get("debugLevel", 1)
        self.modules = {}
        self.releasedModules = []
        self.settings = {"lastVerification": {}}

        self.backgroundTasksQueue = queue.Queue()
        self.backgroundTasksCmds = {}
        self.backgroundTasksLock = threading.Lock()
        self.backgroundResults = {}

        # Shared read-only tables, built on first use
        self.tables = {}
        self.tablesLock = threading.RLock()

        # Register ourself as a module, allows lookups via the Module architecture
        self.registerModule({"name": "master", "ref": self, "type": "Master"})

    def debugLog(self, minlevel, function, message, fields=[]):
        # Trim/pad the module name as needed
        if len(function) < 10:
            function = function.ljust(10)
        data = {
            "debugLevel": self.debugLevel,
            "fields": fields,
            "function": function,
            "logTime": self.time_now(),
            "minLevel": minlevel,
            "message": message,
        }
        atLeastOne = False
        # Pass the debugLog message to all enabled Logging modules
        for module in self.getModulesByType("Logging"):
            atLeastOne = True
            module["ref"].debugLog(data)

        # First calls won't be printed, because there is no logger registered
        if not atLeastOne:
            if data["debugLevel"] >= data["minLevel"]:
                print(
                    colored(data["logTime"] + " ", "yellow")
                    + colored(data["function"], "green")
                    + colored(" %d " % data["minLevel"], "cyan")
                    + str(data["message"]),
                    file=stderr,
                )

    def logCheckResult(self, check):
        for module in self.getModulesByType("Logging"):
            module["ref"].checkResult(check)

    def logFrobeniusReport(self, report):
        for module in self.getModulesByType("Logging"):
            module["ref"].frobeniusReport(report)

    def getConfig(self, key, default=None):
        return self.configConfig.get(key, default)

    def getModuleByName(self, name):
        module = self.modules.get(name, None)
        if module:
            return module["ref"]
        return None

    def getModulesByType(self, type):
        matched = []
        for module in self.modules:
            modinfo = self.modules[module]
            if modinfo["type"] == type:
                matched.append({"name": module, "ref": modinfo["ref"]})
        return matched

    def registerModule(self, module):
        # Modules released during their own constructor stay unregistered
        if module["name"] in self.releasedModules:
            return
        if self.modules.get(module["name"], None):
            self.debugLog(
                7,
                "Master",
                "Avoided re-registration of module %s, which has already been loaded"
                % colored(module["name"], "red"),
            )
            return
        self.modules[module["name"]] = {"ref": module["ref"], "type": module["type"]}
        self.debugLog(7, "Master", "Registered module %s" % colored(module["name"], "red"))

    def releaseModule(self, path, module):
        # Removes a module from the modules dict so it is never called again
        self.releasedModules.append(module)
        if self.modules.get(module, None):
            del self.modules[module]

        fullname = path + "." + module
        if modules.get(fullname, None):
            del modules[fullname]

        self.debugLog(7, "Master", "Released module %s" % colored(module, "red"))

    def settingsFile(self):
        return os.path.join(self.configConfig.get("settingsPath", "."), "settings.json")

    def loadSettings(self):
        # Loads the summary of the last verification run
        fileName = self.settingsFile()
        if not os.path.exists(fileName):
            self.settings = {"lastVerification": {}}
            return

        with open(fileName, "r") as inconfig:
            try:
                self.settings = json.load(inconfig)
            except ValueError:
                self.debugLog(
                    1, "Master", "There was an exception whilst loading settings file " + fileName
                )
                self.settings = {"lastVerification": {}}

    def saveSettings(self):
        fileName = self.settingsFile()
        try:
            with open(fileName, "w") as outconfig:
                json.dump(self.settings, outconfig, indent=2, sort_keys=True)
        except (OSError, TypeError) as e:
            self.debugLog(1, "Master", "Exception raised while attempting to save settings file:")
            self.debugLog(1, "Master", str(e))

    def recordVerification(self, report):
        self.settings["lastVerification"] = {
            "time": datetime.now().strftime("%Y-%m-%d %H:%M:%S"),
            "checks": {c.name: c.status for c in report.checks},
        }

    def time_now(self):
        return datetime.now().strftime(
            "%H:%M:%S" + (".%f" if self.configConfig.get("displayMilliseconds", False) else "")
        )

    def dataPath(self, name):
        return Fixtures.fixture_path(self.configConfig.get("dataPath", "data"), name)

    def getTable(self, name, builder):
        with self.tablesLock:
            if name not in self.tables:
                started = time.monotonic()
                self.debugLog(10, "Master", "Building shared table %s" % name)
                self.tables[name] = builder()
                self.debugLog(
                    11,
                    "Master",
                    "Built %s in %d ms" % (name, (time.monotonic() - started) * 1000),
                )
            return self.tables[name]

    def getFibration(self):
        return self.getTable("fibration", twisted_fibration)

    def getPlaneModel(self, ell=3):
        return self.getTable(
            "model%d" % ell, lambda: torsion_plane_model(self.getFibration(), ell)
        )

    def getFixtureModel(self):
        return self.getTable(
            "fixtureModel", lambda: Fixtures.load_model56(self.dataPath(Fixtures.MODEL56))
        )

    def getGroupTable(self):
        return self.getTable("groupTable", enumerate_su3)

    def getClasses(self):
        return self.getTable("classes", lambda: conjugacy_classes(self.getGroupTable()))

    def getF28(self):
        return self.getTable("f28", lambda: Fixtures.load_f28(self.dataPath(Fixtures.F28)))

    def getSmallPrimeTable(self):
        return self.getTable(
            "apTable", lambda: Fixtures.load_table(self.dataPath(Fixtures.AP_TABLE))
        )

    def getBigPrimeTable(self):
        return self.getTable(
            "bigPrimes", lambda: Fixtures.load_table(self.dataPath(Fixtures.BIG_PRIMES))
        )

    def getResolventToy(self):
        return self.getTable(
            "resolventToy", lambda: Fixtures.load_resolvents(self.dataPath(Fixtures.RESOLVENT_TOY))
        )

    def queue_background_task(self, task):
        key = (task["cmd"], task.get("key"))
        with self.backgroundTasksLock:
            # Never queue the same unit of work twice
            if key in self.backgroundTasksCmds:
                return
            self.backgroundTasksCmds[key] = True
        self.backgroundTasksQueue.put(task)

    def getBackgroundTask(self):
        return self.backgroundTasksQueue.get()

    def deleteBackgroundTask(self, task):
        with self.backgroundTasksLock:
            self.backgroundTasksCmds.pop((task["cmd"], task.get("key")), None)

    def doneBackgroundTask(self):
        self.backgroundTasksQueue.task_done()

    def storeBackgroundResult(self, task, result):
        with self.backgroundTasksLock:
            self.backgroundResults[(task["cmd"], task.get("key"))] = result

    def takeBackgroundResults(self, cmd):
        with self.backgroundTasksLock:
            keys = [k for k in self.backgroundResults if k[0] == cmd]
            return {k[1]: self.backgroundResults.pop(k) for k in keys}
