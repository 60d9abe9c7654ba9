from pcgroup.quotient.cover import TailedPresentation, add_tails, cover_with_images, p_cover
from pcgroup.quotient.enforce import enforce
from pcgroup.quotient.fp import FpPresentation
from pcgroup.quotient.pquotient import QuotientResult, p_quotient

__all__ = [
    "FpPresentation",
    "QuotientResult",
    "TailedPresentation",
    "add_tails",
    "cover_with_images",
    "enforce",
    "p_cover",
    "p_quotient",
]
