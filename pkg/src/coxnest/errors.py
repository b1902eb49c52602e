"""Exception hierarchy shared by all coxnest modules."""


class CoxnestError(Exception):
    pass


class NotAPartition(CoxnestError, ValueError):
    """Blocks overlap, are empty, or do not cover [±n] exactly."""


class NotNegationClosed(NotAPartition):
    pass


class MultipleZeroBlocks(NotAPartition):
    pass


class PartitionSyntaxError(CoxnestError, ValueError):
    pass


class NotADPartition(CoxnestError, ValueError):
    pass


class OverlappingSets(CoxnestError, ValueError):
    pass


class PreconditionError(CoxnestError, ValueError):
    """An argument is outside the domain of the operation."""


class BadRank(CoxnestError, ValueError):
    pass


class NotAnAntichain(CoxnestError, ValueError):
    pass


class NotNonnesting(CoxnestError, ValueError):
    pass


class RankTooLarge(CoxnestError, ValueError):
    pass


class ProfileCollision(CoxnestError):
    def __init__(self, profile, first, second):
        self.profile = profile
        self.first = first
        self.second = second
        super().__init__(f"profile {profile} shared by {first} and {second}")


class ProfileNotFound(CoxnestError, KeyError):
    pass


class CountMismatch(CoxnestError):
    pass


class NotInImage(PreconditionError):
    pass


class NotInDomain(PreconditionError):
    pass
