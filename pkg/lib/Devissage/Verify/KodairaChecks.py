# KodairaChecks module. Fibre types and monodromy at every bad place.

from lib.Devissage.Monodromy.Kodaira import determinant, kodaira_table

EXPECTED_TYPES = {
    "λ=0": "I2*",
    "∞": "I2*",
    "λ=1": "I4",
    "λ=-1": "I4",
    "λ^2 - 2*λ - 1=0": "I0*",
}


class KodairaChecks:

    configVerify = None
    section = "kodaira"
    status = True

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["KodairaChecks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "KodairaChecks")
            return None

    def table(self):
        return self.master.getTable("kodaira", lambda: kodaira_table(self.master.getFibration()))

    def types(self):
        observed = {r.place.label(): str(r.kodairaType) for r in self.table()}
        return (EXPECTED_TYPES, observed)

    def determinants(self):
        return ([1] * len(self.table()), [determinant(r.monodromy) for r in self.table()])

    def runChecks(self, report):
        report.check(self.master, "Kodaira", "kodaira table", self.types)
        report.check(self.master, "Kodaira", "monodromy in SL2(Z)", self.determinants)
