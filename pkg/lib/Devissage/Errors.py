# Exception hierarchy shared by every Devissage module.
#
# The Driver maps these onto exit codes, so new failure modes should
# subclass one of the classes below rather than raising bare exceptions.


class DevissageError(Exception):
    pass


class BadInputError(DevissageError):
    pass


class FixtureError(DevissageError):
    def __init__(self, path, message):
        self.path = path
        super().__init__(str(path) + ": " + message)


class InexactDivisionError(ArithmeticError):
    pass


class UndefinedResultantError(DevissageError):
    pass


class CompositeModulusError(DevissageError):
    pass


class NotIrreducibleError(DevissageError):
    pass


class RamifiedPrimeError(DevissageError):
    pass


class SingularFibrationError(DevissageError):
    pass


class DegenerateSpecializationError(DevissageError):
    pass


class UnsupportedError(DevissageError):
    pass


class InconsistentDataError(DevissageError):
    pass


class InsufficientPrecisionError(DevissageError):
    pass


class UnsuitableParameterError(DevissageError):
    pass
