"""Exception hierarchy.

Input problems (bad files, bad cost models) derive from :class:`InputError`
and map to CLI exit status 1.
"""


class OFAError(Exception):
    pass


class InputError(OFAError, ValueError):
    pass


class EmptyInput(InputError):
    def __init__(self):
        super().__init__("input contains no strings")


class EmptyString(InputError):
    def __init__(self, line=1):
        self.line = line
        super().__init__(f"line {line}: strings must have length >= 1")


class RaggedLengths(InputError):
    def __init__(self, line, expected, got):
        self.line = line
        self.expected = expected
        self.got = got
        super().__init__(f"line {line}: expected length {expected}, got {got}")


class AdjacentDuplicate(InputError):
    def __init__(self, i):
        # 1-based index of the first string of the equal pair
        self.i = i
        super().__init__(f"strings {i} and {i + 1} are identical; no factoring automaton exists")


class BlankLine(InputError):
    def __init__(self, line):
        self.line = line
        super().__init__(f"line {line}: blank line inside input")


class CostModelError(InputError):
    pass


class CostModelMismatch(CostModelError):
    pass


class NoCostModel(OFAError):
    def __init__(self):
        super().__init__("operation requires an index built with a cost model")


class CostOverflow(OFAError):
    pass


class FlavorMismatch(OFAError):
    pass


class Infeasible(OFAError):
    pass


class InstanceTooLarge(OFAError):
    pass
