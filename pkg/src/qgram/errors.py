"""Exception types raised across the package."""


class QGramError(Exception):
    """Base class for every error raised by qgram."""


class NegativePowerOfNonMonomial(QGramError, ValueError):
    pass


class NotInvertible(QGramError, ValueError):
    pass


class UnknownIndeterminate(QGramError, ValueError):
    pass


class UnknownMaster(QGramError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NegativeIndex(QGramError, ValueError):
    pass


class OrderMismatch(QGramError, ValueError):
    pass


class NonUnitConstantTerm(QGramError, ValueError):
    pass


class EmptyOrder(QGramError, ValueError):
    pass


class UnknownName(QGramError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class UnknownId(QGramError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NoLawRecorded(QGramError, LookupError):
    pass


class NotFullPermutation(QGramError, ValueError):
    pass


class BoundExceeded(QGramError, ValueError):
    pass


class GrammarSyntaxError(QGramError, SyntaxError):
    """Malformed grammar text; carries 1-based ``line`` and ``column``."""

    def __init__(self, message, line, column):
        super().__init__(f"{message} (line {line}, column {column})")
        self.msg = message
        self.line = self.lineno = line
        self.column = self.offset = column

    def __str__(self):
        return f"{self.msg} (line {self.line}, column {self.column})"


class SemanticError(QGramError, ValueError):
    pass


class SchemaError(QGramError, ValueError):
    pass
