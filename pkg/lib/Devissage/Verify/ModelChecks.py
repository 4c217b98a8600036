# ModelChecks module. Rebuilds the plane model of the 3-torsion cover and
# compares it with the printed fixture.

from lib.Devissage.Fibration.PlaneModel import squarefree_at, torsion_plane_model


class ModelChecks:

    configVerify = None
    section = "model"
    status = True

    def __init__(self, master):
        self.master = master
        try:
            self.configVerify = master.config["verify"]["ModelChecks"]
        except KeyError:
            self.configVerify = {}
        self.status = self.configVerify.get("enabled", True)

        # Unload if this module is disabled
        if not self.status:
            self.master.releaseModule("lib.Devissage.Verify", "ModelChecks")
            return None

    def matchFixture(self):
        built = self.master.getPlaneModel(3)
        fixture = self.master.getFixtureModel()
        sign = built.signAgainst(fixture)
        if sign == 0:
            diffs = built.differences(fixture, limit=3)
            self.master.debugLog(
                1,
                "ModelCheck",
                "model differs from fixture at "
                + ", ".join("x^%d y^%d: %s vs %s" % (k[0], k[1], a, b) for k, a, b in diffs),
            )
        return ("+1 or -1", "%+d" % sign if sign else "0", sign != 0)

    def leadingTerms(self):
        built = self.master.getPlaneModel(3)
        observed = (built.poly.coefficient(56, 0), built.poly.coefficient(0, 8))
        return ("(-256, 27) up to sign", observed, observed in ((-256, 27), (256, -27)))

    def higherModels(self):
        # Only the y-degree 2 * deg(psi_l) = l^2 - 1 is asserted
        expected, observed = {}, {}
        for ell in self.master.getConfig("modelExtraEll", []):
            model = torsion_plane_model(self.master.getFibration(), ell)
            expected[ell] = ell * ell - 1
            observed[ell] = model.bidegree[1]
        return (expected, observed)

    def runChecks(self, report):
        report.check(self.master, "ModelCheck", "model-56 match", self.matchFixture)
        report.check(
            self.master,
            "ModelCheck",
            "model bidegree",
            lambda: ((56, 8), self.master.getPlaneModel(3).bidegree),
        )
        report.check(self.master, "ModelCheck", "model leading terms", self.leadingTerms)
        report.check(
            self.master,
            "ModelCheck",
            "squarefree at λ=2",
            lambda: (True, squarefree_at(self.master.getPlaneModel(3), 2)),
        )
        if self.master.getConfig("modelExtraEll", []):
            report.check(self.master, "ModelCheck", "higher torsion y-degrees", self.higherModels)
