"""Claim verdict record shared by the check_* operations."""
from dataclasses import dataclass

HOLDS = "HOLDS"
FAILS = "FAILS"
UNDECIDED = "UNDECIDED"
OUT_OF_SCOPE = "OUT_OF_SCOPE"

CLAIM_IDS = ("L1.2", "L1.3", "UFD-IFF", "CHAIN-1", "P2.1", "P2.2",
             "T2.3", "T2.4", "T2.5", "T3.1", "REMARK")


@dataclass
class ClaimOutcome:
    claim_id: str
    d: int
    status: str
    witness: object = None
    reason: str = None

    def __post_init__(self):
        if self.claim_id not in CLAIM_IDS:
            raise ValueError(f"unknown claim id {self.claim_id}")
        if self.status == OUT_OF_SCOPE and (self.witness is not None or not self.reason):
            raise ValueError("OUT_OF_SCOPE takes a reason and no witness")
        if self.status == FAILS and self.witness is None:
            raise ValueError("FAILS needs a witness")

    def to_json(self):
        out = {"claim_id": self.claim_id, "d": self.d, "status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        return out
