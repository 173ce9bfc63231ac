class SpectraAugError(Exception):
    """Base class for errors raised by this package."""


class DimensionMismatchError(SpectraAugError, ValueError):
    pass


class NonFiniteError(SpectraAugError, ValueError):
    pass


class UnsupportedImageError(SpectraAugError, ValueError):
    """The file is not an 8-bit PNG/JPEG this package can decode."""


class EmptyDatasetError(SpectraAugError):
    pass
