"""Exception hierarchy shared by every module."""


class SubshiftError(Exception):
    pass


class UnknownGenerator(SubshiftError, KeyError):
    def __str__(self):
        return f"unknown generator: {self.args[0]!r}"


class InvalidGroup(SubshiftError, ValueError):
    pass


class ResourceLimit(SubshiftError):
    pass


class Inconsistent(SubshiftError, ValueError):
    pass


class GroupMismatch(SubshiftError, ValueError):
    pass


class NotASubgroupEmbedding(SubshiftError, ValueError):
    pass


class NotNearestNeighbor(SubshiftError, ValueError):
    pass


class UnknownVertex(SubshiftError, KeyError):
    pass


class Disconnected(SubshiftError, ValueError):
    pass


class EqualEndpoints(SubshiftError, ValueError):
    pass


class BudgetExceeded(SubshiftError):
    pass


class TargetUnreachable(SubshiftError):
    pass


class WindowEscape(SubshiftError, KeyError):
    pass


class SupportTooLarge(SubshiftError, ValueError):
    pass
