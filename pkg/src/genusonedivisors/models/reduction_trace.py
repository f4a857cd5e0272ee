from dataclasses import dataclass
from typing import Optional, Tuple

from genusonedivisors.errors import FailedToDeserializeException, InternalInconsistencyException
from genusonedivisors.models.permutation import Permutation
from genusonedivisors.models.signature import Signature

PERMUTE = "permute"
NEGATE = "negate"
F_TRANSFORM = "f"


@dataclass(frozen=True)
class Move:
    kind: str
    p: Optional[Permutation] = None

    def apply(self, signature: Signature) -> Signature:
        if self.kind == PERMUTE:
            return signature.permute(self.p)
        if self.kind == NEGATE:
            return signature.negate()
        if self.kind == F_TRANSFORM:
            a1, a2, a3 = signature.entries
            return Signature((a1 - a3, a2 + a3, a3))
        raise InternalInconsistencyException(f"unknown reduction move {self.kind!r}")

    def to_dict(self) -> dict:
        if self.kind == PERMUTE:
            return {"move": PERMUTE, "p": self.p.to_dict()}
        return {"move": self.kind}

    @classmethod
    def from_dict(cls, data: dict) -> "Move":
        kind = data["move"]
        if kind == PERMUTE:
            return cls(PERMUTE, Permutation(tuple(data["p"])))
        if kind not in (NEGATE, F_TRANSFORM):
            raise FailedToDeserializeException(f"unknown reduction move {kind!r}")
        return cls(kind)


@dataclass(frozen=True)
class ReductionTrace:
    start: Signature
    steps: Tuple[Move, ...]
    end: Signature

    @property
    def f_step_count(self) -> int:
        return sum(1 for move in self.steps if move.kind == F_TRANSFORM)

    def intermediate_signatures(self) -> Tuple[Signature, ...]:
        """start followed by the signature after every move"""
        current = self.start
        seen = [current]
        for move in self.steps:
            current = move.apply(current)
            seen.append(current)
        return tuple(seen)

    def replay(self) -> Signature:
        return self.intermediate_signatures()[-1]

    def to_dict(self) -> dict:
        return {
            "start": self.start.to_dict(),
            "steps": [move.to_dict() for move in self.steps],
            "end": self.end.to_dict(),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "ReductionTrace":
        return cls(
            start=Signature(tuple(data["start"])),
            steps=tuple(Move.from_dict(entry) for entry in data["steps"]),
            end=Signature(tuple(data["end"])),
        )
