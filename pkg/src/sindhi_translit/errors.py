"""Exception hierarchy shared across the package.

The CLI maps each family to a distinct exit code, so new exceptions
should subclass the closest existing family rather than Exception.
"""


class TransliterationError(Exception):
    """Base class for every error raised by this package."""


class ConfigError(TransliterationError):
    """Bad or missing configuration: unknown key, bad value, absent path."""


class DataFormatError(TransliterationError):
    """Malformed data file (inventory, mapping table, model, corpus)."""

    def __init__(self, message, path=None, line=None):
        self.path = path
        self.line = line
        prefix = ""
        if path is not None:
            prefix = f"{path}:"
            if line is not None:
                prefix += f"{line}:"
            prefix += " "
        super().__init__(prefix + message)


class AlignmentError(DataFormatError):
    """Aligned source/target rows of unequal length."""


class PipelineError(TransliterationError):
    """Text could not be pushed through the conversion pipeline."""


class OrphanMatraError(PipelineError):
    """A dependent vowel sign appeared with no consonant to attach to."""

    def __init__(self, grapheme, offset):
        self.grapheme = grapheme
        self.offset = offset
        super().__init__(
            f"vowel symbol {grapheme!r} at offset {offset} has no preceding consonant"
        )


class UnmappedGraphemeError(PipelineError):
    """An inventory grapheme has no row in the mapping table."""

    def __init__(self, grapheme, offset=None):
        self.grapheme = grapheme
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(f"no mapping for grapheme {grapheme!r}{where}")


class MissingModelError(PipelineError):
    """Ambiguous mapping encountered but no statistical model is loaded."""

    def __init__(self, grapheme, offset=None):
        self.grapheme = grapheme
        self.offset = offset
        where = f" at offset {offset}" if offset is not None else ""
        super().__init__(
            f"grapheme {grapheme!r}{where} has multiple candidates "
            "and no model is loaded to pick one"
        )


class UndefinedAccuracyError(TransliterationError):
    """Accuracy requested over an empty total."""
