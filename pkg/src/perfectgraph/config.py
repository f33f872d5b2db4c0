"""Desk-scale bounds. Every exponential search checks one of these."""

from dataclasses import dataclass, replace


@dataclass(frozen=True)
class Limits:
    clique: int = 32
    chromatic: int = 32
    perfect: int = 12
    skew: int = 16
    homogeneous_pair: int = 14
    two_join: int = 16
    six_join: int = 16
    wheel: int = 14
    stretcher: int = 14
    berge: int = 14
    star: int = 20

    def with_overrides(self, **kw) -> "Limits":
        return replace(self, **{k: v for k, v in kw.items() if v is not None})


DEFAULT_LIMITS = Limits()


def check_limit(what: str, size: int, limit: int | None) -> None:
    from .errors import ResourceLimitError

    if limit is not None and size > limit:
        raise ResourceLimitError(what, size, limit)
