class GenusOneDivisorsException(RuntimeError):
    pass


class InvalidDimensionException(GenusOneDivisorsException, ValueError):
    pass


class InvalidLabelException(GenusOneDivisorsException, ValueError):
    pass


class DimensionMismatchException(GenusOneDivisorsException, ValueError):
    pass


class InvalidPermutationException(GenusOneDivisorsException, ValueError):
    pass


class InvalidKeepMapException(GenusOneDivisorsException, ValueError):
    pass


class NotZeroSumException(GenusOneDivisorsException, ValueError):
    pass


class DegenerateSignatureException(GenusOneDivisorsException, ValueError):
    pass


class NotPrimitiveException(GenusOneDivisorsException, ValueError):
    pass


class ZeroEntryException(GenusOneDivisorsException, ValueError):
    pass


class UnsupportedForTwoPointsException(GenusOneDivisorsException, ValueError):
    pass


class NotSymmetricException(GenusOneDivisorsException, ValueError):
    pass


class InvalidProfileException(GenusOneDivisorsException, ValueError):
    pass


class NotADivisorException(GenusOneDivisorsException, ValueError):
    pass


class ModulusTooLargeException(GenusOneDivisorsException, ValueError):
    pass


class InternalInconsistencyException(GenusOneDivisorsException):
    pass


class FailedToDeserializeException(GenusOneDivisorsException, TypeError):
    pass


class NotPositiveException(GenusOneDivisorsException, ValueError):
    pass
