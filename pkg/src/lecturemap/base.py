"""Minimal estimator base with the scikit-learn parameter protocol.

Estimators in this package follow the familiar fit/transform/predict shape
so they compose with pipeline-style tooling, but nothing here depends on
scikit-learn itself.
"""

from __future__ import annotations

import inspect
from typing import Any

from .errors import NotFittedError


class Estimator:
    """Base class providing ``get_params`` / ``set_params``.

    Subclasses must accept all hyperparameters as keyword arguments of
    ``__init__`` and store each under the same attribute name.
    """

    @classmethod
    def _param_names(cls) -> list[str]:
        sig = inspect.signature(cls.__init__)
        return [
            name
            for name, p in sig.parameters.items()
            if name != "self" and p.kind not in (p.VAR_POSITIONAL, p.VAR_KEYWORD)
        ]

    def get_params(self, deep: bool = True) -> dict[str, Any]:
        return {name: getattr(self, name) for name in self._param_names()}

    def set_params(self, **params: Any) -> "Estimator":
        valid = set(self._param_names())
        for name, value in params.items():
            if name not in valid:
                raise ValueError(
                    f"invalid parameter {name!r} for {type(self).__name__}; "
                    f"valid parameters are {sorted(valid)}"
                )
            setattr(self, name, value)
        return self

    def _check_fitted(self, *attributes: str) -> None:
        for attr in attributes:
            if not hasattr(self, attr):
                raise NotFittedError(
                    f"{type(self).__name__} is not fitted yet; call fit() first"
                )

    def __repr__(self) -> str:
        params = ", ".join(f"{k}={v!r}" for k, v in self.get_params().items())
        return f"{type(self).__name__}({params})"
