"""Exception hierarchy. Every error the library raises derives from GrpdegError."""


class GrpdegError(ValueError):
    pass


class MalformedTable(GrpdegError):
    pass


class NotAGroup(GrpdegError):
    pass


class NotAPermutation(GrpdegError):
    pass


class NotASubgroup(GrpdegError):
    pass


class OrderCapExceeded(GrpdegError):
    pass


class InvalidParameter(GrpdegError):
    pass


class ParentMismatch(GrpdegError):
    pass


class NotNormal(GrpdegError):
    pass


class ChainViolation(GrpdegError):
    pass


class BudgetExceeded(GrpdegError):
    def __init__(self, needed, budget, hint=""):
        self.needed = needed
        self.budget = budget
        msg = f"needs {needed} evaluations, budget is {budget}"
        if hint:
            msg += f"; {hint}"
        super().__init__(msg)


class ParseError(GrpdegError):
    def __init__(self, message, text, position):
        self.text = text
        self.position = position
        super().__init__(f"{message} at position {position}: {text!r}")
