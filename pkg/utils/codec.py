"""JSON forms of classes, mapping classes and factorizations.

- class: ``[p, q]``
- mapping class: ``{"mat": [[a, b], [c, d]], "ab": n}``
- factorization: ``{"factors": [{"cycle": [p, q], "power": n}, ...], "boundary": [p, q]}``

Every decoding failure is raised as :class:`CodecError`.
"""

import json
from typing import Any, Dict, List

from services.errors import CodecError, MonodromyError
from services.factorization import Factorization, TwistFactor
from services.lattice import HomologyClass
from services.mcg import MCGElement


def class_to_list(c: HomologyClass) -> List[int]:
    return [c.p, c.q]


def class_from_json(data: Any) -> HomologyClass:
    if (not isinstance(data, (list, tuple)) or len(data) != 2
            or not all(_is_int(v) for v in data)):
        raise CodecError(f"expected a class [p, q] of integers, got {data!r}")
    return HomologyClass(int(data[0]), int(data[1]))


def element_to_dict(e: MCGElement) -> Dict[str, Any]:
    return {'mat': [list(row) for row in e.mat], 'ab': e.ab}


def element_from_dict(data: Any) -> MCGElement:
    if not isinstance(data, dict) or 'mat' not in data or 'ab' not in data:
        raise CodecError(f"expected {{'mat': ..., 'ab': ...}}, got {data!r}")
    mat = data['mat']
    if (not isinstance(mat, list) or len(mat) != 2
            or not all(isinstance(row, list) and len(row) == 2 and all(_is_int(v) for v in row)
                       for row in mat)):
        raise CodecError(f"expected a 2x2 integer matrix, got {mat!r}")
    if not _is_int(data['ab']):
        raise CodecError(f"abelianization must be an integer, got {data['ab']!r}")
    try:
        return MCGElement(tuple(tuple(int(v) for v in row) for row in mat), int(data['ab']))
    except ValueError as e:
        raise CodecError(str(e)) from e


def factorization_to_dict(f: Factorization) -> Dict[str, Any]:
    data: Dict[str, Any] = {
        'factors': [{'cycle': class_to_list(factor.cycle), 'power': factor.power}
                    for factor in f.factors],
    }
    if f.boundary is not None:
        data['boundary'] = class_to_list(f.boundary)
    return data


def factorization_from_dict(data: Any) -> Factorization:
    if not isinstance(data, dict) or not isinstance(data.get('factors'), list):
        raise CodecError("expected an object with a 'factors' list")
    factors = []
    for item in data['factors']:
        if not isinstance(item, dict) or 'cycle' not in item or not _is_int(item.get('power')):
            raise CodecError(f"malformed factor {item!r}")
        try:
            factors.append(TwistFactor(class_from_json(item['cycle']), int(item['power'])))
        except CodecError:
            raise
        except MonodromyError as e:
            raise CodecError(f"invalid factor {item!r}: {e}") from e
    boundary = data.get('boundary')
    try:
        return Factorization(tuple(factors), class_from_json(boundary) if boundary is not None else None)
    except CodecError:
        raise
    except MonodromyError as e:
        raise CodecError(f"invalid boundary {boundary!r}: {e}") from e


def loads(text: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise CodecError(f"malformed JSON: {e}") from e


def dumps(data: Any) -> str:
    """Stable JSON text: sorted keys, two-space indent."""
    return json.dumps(data, sort_keys=True, indent=2)


def _is_int(value: Any) -> bool:
    return isinstance(value, int) and not isinstance(value, bool)
