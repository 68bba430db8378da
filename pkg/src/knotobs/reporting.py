"""Named certificate checks shared by the certificate-producing modules."""

from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CertificateCheck:
    name: str
    passed: bool
    witness: str | None = None

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "witness": self.witness}
