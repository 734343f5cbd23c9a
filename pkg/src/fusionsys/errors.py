"""Exception hierarchy.

Cap violations, malformed inputs and internal disagreement signals get
distinct classes so the CLI can map them to distinct exit codes.
"""


class FusionsysError(Exception):
    """Base class for all package errors."""


class CapExceeded(FusionsysError):
    """A configured size cap was exceeded (CLI exit code 3)."""


class OrderCapExceeded(CapExceeded):
    pass


class SubgroupCapExceeded(CapExceeded):
    pass


class MapCapExceeded(CapExceeded):
    pass


class ClassifierCapExceeded(CapExceeded):
    pass


class MalformedPermutation(FusionsysError):
    pass


class UnknownName(FusionsysError):
    pass


class ForeignSubgroup(FusionsysError):
    pass


class MissingPrime(FusionsysError):
    pass


class NotNormal(FusionsysError):
    pass


class NotSylow(FusionsysError):
    pass


class ElementOutsideH(FusionsysError):
    pass


class NotIsomorphism(FusionsysError):
    pass


class ImageNotContained(FusionsysError):
    pass


class NotAutomorphism(FusionsysError):
    pass


class NotPSubgroup(FusionsysError):
    pass


class DifferentUnderlyingGroup(FusionsysError):
    pass


class NotIsoInF(FusionsysError):
    pass


class NotSaturated(FusionsysError):
    pass


class NotNormalizedRepresentative(FusionsysError):
    pass


class NotNormalInF(FusionsysError):
    pass


class ContainmentViolated(FusionsysError):
    pass


class InternalDisagreement(FusionsysError):
    """Two independent computations of the same fact disagree (CLI exit 4).

    These are bug signals, never expected outcomes.
    """


class DefinitionDisagreement(InternalDisagreement):
    pass


class CriterionDisagreement(InternalDisagreement):
    pass


class ClauseDisagreement(InternalDisagreement):
    pass


class MethodDisagreement(InternalDisagreement):
    pass


class NoFactorization(InternalDisagreement):
    pass
