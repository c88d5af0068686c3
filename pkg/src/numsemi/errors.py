"""Exception hierarchy shared by all modules."""


class SemigroupError(ValueError):
    pass


class EmptyInput(SemigroupError):
    pass


class GcdError(SemigroupError):
    pass


class NotASemigroup(SemigroupError):
    pass


class NotAMember(SemigroupError):
    pass


class InputTooLarge(SemigroupError):
    """Generators beyond MAX_GENERATOR would make the membership table unreasonably large."""


class GenusZero(SemigroupError):
    """Raised by bound and T1 computations, which need at least one gap."""


class CapExceeded(SemigroupError):
    pass


class NegativeDimension(ArithmeticError):
    """The graded T1 formula produced a negative value outside End(N).

    This can only happen when the presentation or the End computation is
    inconsistent, so it is a diagnostic rather than a user error.
    """

    def __init__(self, degree, a_count, v_dim):
        self.degree = degree
        self.a_count = a_count
        self.v_dim = v_dim
        super().__init__(
            f"negative T1 dimension at degree {degree}: |A|={a_count}, dim V={v_dim}"
        )


class BadFamily(ValueError):
    pass


class BadTau(ValueError):
    pass
