"""One-line JSON records for reports, stable across runs."""

from __future__ import annotations

import json

from .linalg import AbelianInvariants
from .verify import LambdaInfo, RootCertificate, VerificationReport


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def invariants_dict(g: AbelianInvariants) -> dict:
    return {"free_rank": g.free_rank, "torsion": list(g.torsion)}


def lambda_dict(info: LambdaInfo) -> dict:
    return {
        "k": info.k,
        "index": "infinite" if info.index is None else info.index,
        **invariants_dict(info.quotient),
    }


def certificate_dict(cert: RootCertificate) -> dict:
    return {
        "root": list(cert.root),
        "generators": [list(g) for g in cert.generators],
        "coefficients": list(cert.coefficients),
    }


def report_dict(report: VerificationReport, certificates: bool = False) -> dict:
    out = {"id": report.id, "n": report.n, "reflexive": report.reflexive}
    if not report.reflexive:
        return out
    out["lambda"] = [lambda_dict(info) for info in report.lambdas]
    out["flags"] = dict(report.flags)
    out["certificate_count"] = len(report.certificates)
    if certificates:
        out["certificates"] = [certificate_dict(c) for c in report.certificates]
    if report.lemmas is not None:
        out["lemmas"] = report.lemmas
    if report.fatal:
        out["fatal"] = report.fatal
    return out


def emit_report(report: VerificationReport, certificates: bool = False) -> str:
    return dumps(report_dict(report, certificates))
