"""Exception types shared across the package."""


class DataError(Exception):
    """A problem with user-supplied data (corpus files, selections, ground truth)."""


class CorpusError(DataError):
    """The corpus directory is missing required pieces or is malformed."""


class SelectionError(DataError):
    """A phrase selection references phrases that do not exist."""


class NotFittedError(RuntimeError):
    """An estimator method was called before ``fit``."""
