# Ordered record of named checks and the plumbing that runs them.

from dataclasses import dataclass, field
import time
import traceback

from termcolor import colored

PASS = "pass"
FAIL = "fail"
SKIP = "skip"


class SkipCheck(Exception):
    pass


@dataclass
class CheckResult:
    name: str
    module: str
    status: str
    expected: str = ""
    observed: str = ""
    millis: int = 0
    detail: str = ""

    @property
    def failed(self):
        return self.status == FAIL

    def asDict(self):
        return {
            "name": self.name,
            "module": self.module,
            "status": self.status,
            "expected": self.expected,
            "observed": self.observed,
            "millis": self.millis,
            "detail": self.detail,
        }


@dataclass
class VerificationReport:
    selection: str = "all"
    checks: list = field(default_factory=list)

    def add(self, check):
        self.checks.append(check)
        return check

    @property
    def failures(self):
        return [c for c in self.checks if c.failed]

    @property
    def passed(self):
        return not self.failures

    def count(self, status):
        return sum(1 for c in self.checks if c.status == status)

    @property
    def exitCode(self):
        return 0 if self.passed else 1

    def check(self, master, module, name, fn):
        # fn() returns (expected, observed) or (expected, observed, passed);
        # any exception becomes a failing check
        started = time.monotonic()
        try:
            outcome = fn()
            if len(outcome) == 3:
                expected, observed, ok = outcome
            else:
                expected, observed = outcome
                ok = expected == observed
            result = CheckResult(name, module, PASS if ok else FAIL, str(expected), str(observed))
        except SkipCheck as e:
            result = CheckResult(name, module, SKIP, detail=str(e))
        except Exception as e:
            master.debugLog(
                2,
                module,
                colored("CheckError", "red") + ": " + traceback.format_exc() + ", occurred in check " + name,
            )
            result = CheckResult(name, module, FAIL, detail="%s: %s" % (type(e).__name__, e))
        result.millis = int((time.monotonic() - started) * 1000)
        self.add(result)
        master.logCheckResult(result)
        return result
