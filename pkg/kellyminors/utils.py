import os
from dataclasses import fields
from typing import Dict, List, Optional, Union

from kellyminors.exceptions import CapacityError, KellyError

JSON = Union[str, int, float, bool, None, Dict[str, "JSON"], List["JSON"]]

MAX_N_ENV = "KELLY_MAX_N"


def get_max_n(default: int, max_n: Optional[int] = None) -> int:
    """
    Resolves the vertex-count bound for a desk-scale operation.

    An explicit `max_n` wins; otherwise ``KELLY_MAX_N`` overrides `default`
    when it is set.
    """

    if max_n is not None:
        return max_n

    raw = os.getenv(MAX_N_ENV)
    if not raw:
        return default

    try:
        value = int(raw.strip())
    except ValueError as exc:
        raise KellyError(f"{MAX_N_ENV} is not an integer", raw) from exc
    if value < 0:
        raise KellyError(f"{MAX_N_ENV} must be non-negative", raw)
    return value


def check_capacity(what: str, n: int, default: int, max_n: Optional[int] = None) -> int:
    bound = get_max_n(default, max_n)
    if n > bound:
        raise CapacityError(
            f"{what} supports at most {bound} vertices", f"got {n}"
        )
    return bound


def ignore_extra_fields(cls):
    """Lets a dataclass be built from a JSON object carrying unknown keys."""
    original_init = cls.__init__

    def __init__(self, *args, **kwargs):
        cls_fields = {field.name for field in fields(cls)}
        original_init(
            self, *args, **{name: value for name, value in kwargs.items() if name in cls_fields}
        )

    setattr(cls, "__init__", __init__)
    return cls
