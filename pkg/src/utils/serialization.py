"""
JSON encoding of classes, series and verification reports
"""

import json
import logging
from typing import Any, Dict, List, Union

from src.series.lefschetz import LefschetzPoly
from src.series.truncated import CoefficientRing, TruncatedSeries
from src.zeta.verification import VerificationReport


logger = logging.getLogger(__name__)


def encode_int(value: int) -> str:
    """Big integers travel as decimal strings"""
    return str(value)


def encode_poly(p: LefschetzPoly) -> List[Dict[str, Any]]:
    """[{"m": exponent, "a": "coefficient"}, ...] in ascending exponent order"""
    return [{"m": exponent, "a": encode_int(coefficient)} for exponent, coefficient in p.items()]


def encode_series(f: TruncatedSeries) -> Dict[str, Any]:
    if f.ring is CoefficientRing.LEFSCHETZ:
        coeffs: List[Any] = [encode_poly(c) for c in f.coeffs]
    else:
        coeffs = [encode_int(c) for c in f.coeffs]
    return {"coeffs": coeffs, "order": f.precision}


def encode_result(value: Union[int, LefschetzPoly, TruncatedSeries, Dict[str, Any]]) -> Any:
    if isinstance(value, TruncatedSeries):
        return encode_series(value)
    if isinstance(value, LefschetzPoly):
        return encode_poly(value)
    if isinstance(value, int) and not isinstance(value, bool):
        return encode_int(value)
    return value


def command_payload(command: str, order: int, result: Any = None,
                    report: VerificationReport = None) -> str:
    """One JSON object per invocation: {command, order, result | report}"""
    payload: Dict[str, Any] = {"command": command, "order": order}
    if report is not None:
        payload["report"] = report.to_json_dict()
    else:
        payload["result"] = encode_result(result)
    return json.dumps(payload, ensure_ascii=False)
