# src/reductions/interface.py
import abc
import random
from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Tuple


@dataclass(frozen=True)
class ReductionCertificate:
    """Ties a generated instance to its source, the parameter map and the equivalence it must satisfy."""
    reduction: str
    construction: str
    source: Dict[str, Any]
    k: int
    k_prime: int
    claim: str
    notes: Tuple[str, ...] = ()

    def to_json(self) -> dict:
        return {
            "reduction": self.reduction,
            "construction": self.construction,
            "source": self.source,
            "parameter_map": {"k": self.k, "k_prime": self.k_prime},
            "claim": self.claim,
            "notes": list(self.notes),
        }


@dataclass(frozen=True)
class Generated:
    """What a reduction hands back: the produced object, its JSON form and the certificate."""
    produced: Any
    payload: Dict[str, Any]
    certificate: ReductionCertificate


@dataclass(frozen=True)
class TrialResult:
    reduction: str
    source: str
    k: int
    expected: Any
    observed: Any
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.expected == self.observed


class Reduction(abc.ABC):
    """
    Abstract base class for a reduction generator.

    Every concrete subclass in a module of the `src.reductions` package is picked up by the
    registry, and then shows up in both `gen` and `verify-reduction` under its NAME.
    """

    @property
    @abc.abstractmethod
    def NAME(self) -> str:
        """The command-line name, e.g. 'dominating-set'."""
        raise NotImplementedError

    @abc.abstractmethod
    def load_source(self, path: str) -> Any:
        """Reads the source instance from a file in this reduction's input format."""
        raise NotImplementedError

    @abc.abstractmethod
    def generate(self, source: Any, k: int, **options) -> Generated:
        raise NotImplementedError

    @abc.abstractmethod
    def small_sources(self, max_size: int) -> Iterator[Tuple[Any, int]]:
        """Deterministic exhaustive family of (source, k) pairs up to max_size."""
        raise NotImplementedError

    @abc.abstractmethod
    def random_source(self, rng: random.Random, max_size: int) -> Tuple[Any, int]:
        raise NotImplementedError

    @abc.abstractmethod
    def check(self, source: Any, k: int) -> TrialResult:
        """Runs the oracle on the source and a solver on the generated target and compares them."""
        raise NotImplementedError

    def describe_source(self, source: Any) -> str:
        if hasattr(source, "describe"):
            d = source.describe()
            return str(d) if not isinstance(d, str) else d
        return repr(source)
