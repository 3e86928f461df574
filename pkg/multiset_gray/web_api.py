#!/usr/bin/env python3
"""
Flask JSON API for multiset_gray
Read-only endpoints over enumeration, verification, motion, graphs and
tensor polynomials, plus the stored motion experiments
"""

import logging
import math
from functools import wraps
from typing import Optional

from flask import Flask, jsonify, request

from . import config
from .core import check_cap, format_permutation, multinomial_count, parse_multiset
from .errors import InvalidArgs, MultisetGrayError
from .experiment_store import ExperimentStore
from .metrics import compare_motion, motion_for_algorithm
from .multiperm import generate_all, iter_steps
from .refgens import check_nk
from .tensorpoly import (
    AGAOKA_B2222,
    build_polynomial,
    build_tableau,
    compare_polynomials,
    parse_partition,
    stream_cardinality,
    vertical_group_order,
)
from .verify import (
    check_circular,
    check_exactly_once,
    graph_to_dot,
    transposition_graph,
    verify_marked_lemma,
)

logger = logging.getLogger(__name__)

# Configuration
HOST = config.WEB_HOST
PORT = config.WEB_PORT
MAX_ROWS = config.WEB_MAX_ROWS
DEBUG = False

# Initialize Flask app
app = Flask(__name__)

# Opened on first use; tests replace it with a temporary store
experiment_store: Optional[ExperimentStore] = None


def get_store() -> ExperimentStore:
    global experiment_store
    if experiment_store is None:
        experiment_store = ExperimentStore(config.DB_PATH)
    return experiment_store


def api_errors(f):
    """Decorator turning domain errors into 400 and anything else into 500."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        try:
            return f(*args, **kwargs)
        except MultisetGrayError as e:
            logger.info(f"Rejected {request.path}: {e}")
            return jsonify({
                'success': False,
                'error': str(e)
            }), 400
        except Exception as e:
            logger.error(f"API error on {request.path}: {e}")
            return jsonify({
                'success': False,
                'error': str(e)
            }), 500

    return decorated_function


def _int_arg(name: str, default: Optional[int] = None) -> int:
    raw = request.args.get(name)
    if raw is None or raw == "":
        if default is None:
            raise InvalidArgs(f"missing query parameter '{name}'")
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidArgs(f"query parameter '{name}' must be an integer, got {raw!r}")


def _flag_arg(name: str) -> bool:
    return request.args.get(name, "0").lower() in ("1", "true", "yes")


def _multiset_arg():
    raw = request.args.get("multiset")
    if not raw:
        raise InvalidArgs("missing query parameter 'multiset'")
    return parse_multiset(raw)


@app.after_request
def add_security_headers(response):
    """Add security headers to all responses."""
    response.headers['X-Content-Type-Options'] = 'nosniff'
    response.headers['X-Frame-Options'] = 'DENY'
    response.headers['Cache-Control'] = 'no-store'
    return response


# ============================================================================
# API ROUTES (JSON)
# ============================================================================

@app.route('/api/enumerate', methods=['GET'])
@api_errors
def api_enumerate():
    """API: Stream permutations of a multiset, optionally with moves and signs."""
    spec = _multiset_arg()
    total = multinomial_count(spec)
    limit = _int_arg("limit", min(total, MAX_ROWS))
    check_cap(f"response of {spec}", min(limit, total), MAX_ROWS)
    with_trace = _flag_arg("trace")

    rows = []
    sign = 1
    for record in iter_steps(spec, limit):
        if with_trace:
            rows.append({
                'permutation': format_permutation(record.permutation),
                'move': str(record.move) if record.move else None,
                'sign': sign,
            })
            sign = -sign
        else:
            rows.append(format_permutation(record.permutation))

    return jsonify({
        'success': True,
        'multiset': str(spec),
        'total': total,
        'count': len(rows),
        'permutations': rows
    })


@app.route('/api/verify', methods=['GET'])
@api_errors
def api_verify():
    """API: Exactly-once and circularity reports for the generator."""
    spec = _multiset_arg()
    trace = generate_all(spec, cap=MAX_ROWS)
    report = check_exactly_once(trace, spec, cap=MAX_ROWS)
    circular = check_circular(trace)

    return jsonify({
        'success': True,
        'exactly_once': report.to_dict(),
        'circular': circular.to_dict(),
        'passed': report.passed
    })


@app.route('/api/motion', methods=['GET'])
@api_errors
def api_motion():
    """API: Total motion and width histogram of one algorithm."""
    n = _int_arg("n")
    k = _int_arg("k")
    algo = request.args.get("algo", "ours")
    check_nk(n, k)
    check_cap(f"motion of ({n},{k})", math.comb(n, k), MAX_ROWS)
    stats = motion_for_algorithm(n, k, algo, cap=MAX_ROWS)

    return jsonify({
        'success': True,
        'n': n,
        'k': k,
        'algo': algo,
        'motion': stats.to_dict()
    })


@app.route('/api/compare', methods=['GET'])
@api_errors
def api_compare():
    """API: Motion comparison rows up to max_n; store=1 also saves them."""
    max_n = _int_arg("max_n")
    rows = compare_motion(max_n, cap=MAX_ROWS)
    saved = get_store().save_rows(rows) if _flag_arg("store") else 0

    return jsonify({
        'success': True,
        'rows': [row.to_dict() for row in rows],
        'count': len(rows),
        'all_hold': all(row.holds for row in rows),
        'saved': saved
    })


@app.route('/api/lemma', methods=['GET'])
@api_errors
def api_lemma():
    """API: Marked combination lemma report."""
    n = _int_arg("n")
    k = _int_arg("k")
    check_nk(n, k)
    check_cap(f"C'({n},{k})", math.comb(n, k), MAX_ROWS)
    report = verify_marked_lemma(n, k)

    return jsonify({
        'success': True,
        'report': report.to_dict(),
        'passed': report.passed
    })


@app.route('/api/graph', methods=['GET'])
@api_errors
def api_graph():
    """API: Transposition graph summary, with DOT text when dot=1."""
    spec = _multiset_arg()
    max_width = _int_arg("max_width", 1)
    count = multinomial_count(spec)
    check_cap(f"graph of {spec}", count, MAX_ROWS)
    report = transposition_graph(spec, max_width, hamilton=count <= config.HAMILTON_MAX_VERTICES)

    payload = {
        'success': True,
        'multiset': str(spec),
        'max_width': max_width,
        'graph': report.to_dict()
    }
    if _flag_arg("dot"):
        payload['dot'] = graph_to_dot(report)
    return jsonify(payload)


@app.route('/api/poly', methods=['GET'])
@api_errors
def api_poly():
    """API: Invariant polynomial of a paired Young tableau."""
    raw = request.args.get("partition")
    if not raw:
        raise InvalidArgs("missing query parameter 'partition'")
    tableau = build_tableau(parse_partition(raw))
    identify = not _flag_arg("raw")
    poly = build_polynomial(tableau, identify_equal_factors=identify, cap=MAX_ROWS)

    payload = {
        'success': True,
        'partition': list(tableau.partition),
        'vertical_group_order': vertical_group_order(tableau),
        'stream_cardinality': stream_cardinality(tableau),
        'polynomial': poly.to_dict(),
        'human': poly.format_human()
    }
    if identify and tableau.partition == (2, 2, 2, 2):
        payload['agaoka_match'] = not compare_polynomials(poly, AGAOKA_B2222)
    return jsonify(payload)


@app.route('/api/experiments', methods=['GET'])
@api_errors
def api_experiments():
    """API: Stored motion comparison rows."""
    n_max = _int_arg("n_max", 0)
    rows = get_store().load_rows(n_max or None)

    return jsonify({
        'success': True,
        'rows': [row.to_dict() for row in rows],
        'count': len(rows)
    })


# ============================================================================
# ERROR HANDLERS
# ============================================================================

@app.errorhandler(404)
def not_found(error):
    """Handle 404 errors."""
    return jsonify({
        'success': False,
        'error': 'Endpoint not found'
    }), 404


@app.errorhandler(500)
def internal_error(error):
    """Handle 500 errors."""
    logger.error(f"Internal server error: {error}")
    return jsonify({
        'success': False,
        'error': 'Internal server error'
    }), 500


def main():
    config.setup_logging(config.WEB_LOG_LEVEL)

    logger.info("Starting multiset_gray API...")
    logger.info(f"Listening on http://{HOST}:{PORT}")

    app.run(host=HOST, port=PORT, debug=DEBUG)


if __name__ == '__main__':
    main()
