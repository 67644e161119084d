class QFlagError(RuntimeError):
    pass


class ParserError(QFlagError):
    """
    Raised for syntax and name resolution errors in DSL text. ``lineno``
    and ``column`` are 1-based and may be ``None`` if unknown.
    """

    def __init__(self, message, lineno=None, column=None):
        super(ParserError, self).__init__(message)
        self.message = message
        self.lineno = lineno
        self.column = column

    def __str__(self):
        if self.lineno is None:
            return self.message

        if self.column is None:
            return 'line %d: %s' % (self.lineno, self.message)

        return 'line %d, column %d: %s' % (self.lineno, self.column, self.message)


class ScalarError(QFlagError, ZeroDivisionError):
    pass


class PresentationError(QFlagError):
    pass


class ReductionError(QFlagError):
    def __init__(self, message, trace=None):
        super(ReductionError, self).__init__(message)
        self.trace = trace


class UndecidedError(QFlagError):
    def __init__(self, message, bound=None, dimension=None):
        super(UndecidedError, self).__init__(message)
        self.bound = bound
        self.dimension = dimension
