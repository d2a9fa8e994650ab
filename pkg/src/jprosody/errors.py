"""Exception hierarchy shared by every stage of the pipeline."""


class ProsodyError(Exception):
    """Base class for all errors raised by jprosody."""


class ParseError(ProsodyError):
    """Input text could not be read. Carries an optional 1-based line/column."""

    def __init__(self, message, line=None, col=None):
        super().__init__(message)
        self.message = message
        self.line = line
        self.col = col

    def __str__(self):
        if self.line is None:
            return self.message
        if self.col is None:
            return f"line {self.line}: {self.message}"
        return f"line {self.line}, col {self.col}: {self.message}"


class UnbalancedBrackets(ParseError):
    pass


class UnknownCategory(ParseError):
    pass


class MalformedLeaf(ParseError):
    pass


class EmptyTree(ParseError):
    pass


class StrayToken(ParseError):
    pass


class UnknownMoraToken(ProsodyError, ValueError):
    pass


class NoClause(ProsodyError):
    """The root of a syntactic tree is neither IP nor CP."""


class HeadResolutionFailure(ProsodyError):
    pass


class EmptyTargets(ProsodyError, ValueError):
    pass


class NonPositiveFrequency(ProsodyError, ValueError):
    pass


class InsufficientMoras(ProsodyError):
    pass


class MissingWord(ProsodyError):
    pass


class UnknownFixture(ProsodyError, LookupError):
    pass
