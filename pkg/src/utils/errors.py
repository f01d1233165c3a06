"""
Error types raised by the kolchin engine
"""

from typing import Any, Optional


class KolchinError(Exception):
    """Base class for every error raised by the engine"""
    pass


class ZeroElement(KolchinError, ZeroDivisionError):
    """Raised when a zero element is inverted"""
    pass


class ReducibleMinPoly(KolchinError):
    """
    A presented minimal polynomial turned out to be reducible.

    Raised lazily by inversion when the extended Euclidean algorithm finds a
    nontrivial common factor with the generator's minimal polynomial.
    """

    def __init__(self, generator: str, factor: Any):
        self.generator = generator
        self.factor = factor
        super().__init__(
            f"minimal polynomial of '{generator}' is reducible: factor {factor}"
        )


class UnsupportedTower(KolchinError):
    """The requested computation is not available on this tower"""
    pass


class InvalidDerivation(KolchinError):
    """A derivation image violates the extension condition of a generator"""

    def __init__(self, generator: str, lhs: Any, case: str = ""):
        self.generator = generator
        self.lhs = lhs
        self.case = case
        detail = f" ({case})" if case else ""
        super().__init__(
            f"derivation condition fails at '{generator}'{detail}: lhs = {lhs}"
        )


class InvalidEndomorphism(KolchinError):
    """An endomorphism image does not satisfy the transported relation"""

    def __init__(self, generator: str, lhs: Any = None, reason: str = ""):
        self.generator = generator
        self.lhs = lhs
        self.reason = reason
        text = reason or f"transported minimal polynomial evaluates to {lhs}"
        super().__init__(f"endomorphism condition fails at '{generator}': {text}")


class NotSeparable(KolchinError):
    """Forced extension requested for an inseparable generator"""
    pass


class PRootMissing(KolchinError):
    """A constant has no p-th root in the presented tower"""

    def __init__(self, element: Any):
        self.element = element
        super().__init__(f"no presented p-th root of {element}")


class InseparableLeaderTooHigh(KolchinError):
    """Prolongation precondition: inseparable leaders must sit below the top level"""

    def __init__(self, index: Any):
        self.index = index
        super().__init__(f"inseparable leader at top level: {index}")


class HypothesisViolation(KolchinError):
    """A bound or leader-locality hypothesis of a prolongation fails"""

    def __init__(self, reason: str, witness: Optional[str] = None):
        self.reason = reason
        self.witness = witness
        suffix = f" (witness {witness})" if witness else ""
        super().__init__(f"{reason}{suffix}")


class ChoiceRequired(KolchinError):
    """A free slot of a realization needs a caller-supplied value"""

    def __init__(self, slot: Any, reason: str = "the default 0 is rejected"):
        self.slot = slot
        self.reason = reason
        super().__init__(f"choice required for slot {slot}: {reason}")


class PlanInconsistent(KolchinError):
    """A surjectivization plan step does not vanish where it must"""

    def __init__(self, step: int, value: Any = None):
        self.step = step
        self.value = value
        super().__init__(f"plan step {step} is inconsistent (value {value})")


class NotAConstant(KolchinError):
    """A perfect-extension plan constant is not a δ-constant"""

    def __init__(self, position: int, derivative: Any = None):
        self.position = position
        self.derivative = derivative
        super().__init__(
            f"plan constant #{position} is not a constant (δ = {derivative})"
        )


class KernelError(KolchinError):
    """A constructed kernel failed re-verification"""

    def __init__(self, message: str, violations: Optional[list] = None):
        self.violations = list(violations or [])
        super().__init__(message)
