"""Enumeration size caps.

Defaults can be overridden through ``STAIRCASE_SIZE_CAP`` and
``STAIRCASE_MAX_N``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

ENV_SIZE_CAP = "STAIRCASE_SIZE_CAP"
ENV_MAX_N = "STAIRCASE_MAX_N"


class CapExceeded(ValueError):
    """An enumeration was asked to go past its configured bound."""

    def __init__(self, bound: str, limit: int, requested: int):
        self.bound = bound
        self.limit = limit
        self.requested = requested
        super().__init__(f"{bound} cap exceeded: requested {requested}, limit {limit}")


@dataclass(frozen=True)
class Caps:
    size: int = 16
    n: int = 8

    @classmethod
    def from_env(cls) -> "Caps":
        size = int(os.environ.get(ENV_SIZE_CAP, cls.size))
        n = int(os.environ.get(ENV_MAX_N, cls.n))
        return cls(size=size, n=n)

    def check(self, size: int, n: int) -> None:
        if size > self.size:
            raise CapExceeded("size", self.size, size)
        if n > self.n:
            raise CapExceeded("n", self.n, n)


def default_caps() -> Caps:
    return Caps.from_env()
