# Places of Q(lambda) over which the fibration has singular fibres.

from dataclasses import dataclass

from lib.Devissage.Monodromy.Kodaira import minimal_triple, raw_valuations
from lib.Devissage.Monodromy.Place import Place, factor_places


@dataclass(frozen=True)
class BadFibre:
    place: Place
    multiplicity: int
    split: bool

    def label(self):
        return self.place.label()


def bad_fibres(E, bound=500):
    fibres = []
    for place, mult in factor_places(E.discriminant, bound):
        fibres.append(BadFibre(place, mult, place.residueDegree == 1))
    infinity = Place.infinity()
    vD = minimal_triple(*raw_valuations(E, infinity))[2]
    if vD > 0:
        fibres.append(BadFibre(infinity, vD, True))
    return fibres


def bad_locus(E, bound=500):
    return [fibre.place for fibre in bad_fibres(E, bound)]
