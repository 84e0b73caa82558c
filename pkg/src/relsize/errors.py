"""Exception types shared across the workbench."""


class WorkbenchError(Exception):
    """Base class; every input/validation error derives from this."""


class ParseError(WorkbenchError):
    def __init__(self, source, position, message):
        self.source = source
        self.position = position
        super().__init__(f"{source}: {message} (at {position})")


class NotSquare(WorkbenchError):
    pass


class OutOfRangeEntry(WorkbenchError):
    def __init__(self, i, j, value):
        self.i, self.j, self.value = i, j, value
        super().__init__(f"table[{i}][{j}] = {value} is out of range")


class NonAssociative(WorkbenchError):
    def __init__(self, i, j, k):
        self.witness = (i, j, k)
        super().__init__(f"associativity fails at (i,j,k) = ({i},{j},{k})")


class NotASubsemigroup(WorkbenchError):
    def __init__(self, a, b):
        self.witness = (a, b)
        super().__init__(f"not closed under the operation: {a}*{b} leaves the set")


class SizeLimit(WorkbenchError):
    pass


class UniverseTooLarge(WorkbenchError):
    pass


class UniverseMismatch(WorkbenchError):
    pass


class SpaceTooLarge(WorkbenchError):
    pass


class NotAStack(WorkbenchError):
    pass


class NotAFilter(WorkbenchError):
    pass


class HypothesisViolated(WorkbenchError):
    def __init__(self, name, detail=""):
        self.name = name
        msg = f"hypothesis not satisfied: {name}"
        super().__init__(msg + (f" ({detail})" if detail else ""))


class SearchSpaceTooLarge(WorkbenchError):
    def __init__(self, size, bound):
        self.size, self.bound = size, bound
        super().__init__(f"search space of {size} exceeds bound {bound}")


class UnknownLawId(WorkbenchError):
    pass


class UnknownHypothesis(WorkbenchError):
    pass
