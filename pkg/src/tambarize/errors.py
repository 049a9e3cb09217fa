"""Exception hierarchy shared by every module of the package."""


class TambarizeError(Exception):
    pass


# group construction
class GroupError(TambarizeError, ValueError):
    pass


class MalformedTable(GroupError):
    pass


class NonAssociative(GroupError):
    pass


class NoIdentity(GroupError):
    pass


class NoInverse(GroupError):
    pass


class GroupTooLarge(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


class NotContained(GroupError):
    pass


class GroupMismatch(TambarizeError, ValueError):
    pass


# G-sets and maps
class BaseMismatch(TambarizeError, ValueError):
    pass


class NotEquivariant(TambarizeError, ValueError):
    pass


class LemmaViolated(TambarizeError):
    def __init__(self, lemma, instance):
        super().__init__(f"{lemma} violated on {instance!r}")
        self.lemma = lemma
        self.instance = instance


# monoids and functors
class MonoidError(TambarizeError, ValueError):
    pass


class NotAMackeyMorphism(TambarizeError, ValueError):
    pass


class NotATambaraMorphism(TambarizeError, ValueError):
    pass


class NontrivialQUnsupported(TambarizeError, ValueError):
    pass


class SpecError(TambarizeError, ValueError):
    """Malformed job or object specification (CLI exit code 2)."""
