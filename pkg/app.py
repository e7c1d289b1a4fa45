import os
from flask import Flask, request, jsonify
from flask_cors import CORS
from dotenv import load_dotenv

# Load environment variables
load_dotenv()

app = Flask(__name__)
CORS(app, resources={r"/api/*": {"origins": "*"}})

# Import services
from cli import CHECKS, run_check
from services import cluster, polygon
from services.errors import StokesError

# Environment variable definitions for the config endpoint
ENV_VAR_CONFIG = {
    "STOKES_MAX_K": {
        "configured": bool(os.environ.get("STOKES_MAX_K")),
        "value": int(os.environ.get("STOKES_MAX_K", 3)),
        "required_for": ["fn-check", "flip", "mutation-walk"],
        "description": "Largest K checked symbolically; larger K falls back to random rational points"
    },
    "STOKES_MAX_K_IDEAL": {
        "configured": bool(os.environ.get("STOKES_MAX_K_IDEAL")),
        "value": int(os.environ.get("STOKES_MAX_K_IDEAL", 2)),
        "required_for": ["ideal-check"],
        "description": "Largest K for the Jacobi identity checks"
    },
    "STOKES_SAMPLE_POINTS": {
        "configured": bool(os.environ.get("STOKES_SAMPLE_POINTS")),
        "value": int(os.environ.get("STOKES_SAMPLE_POINTS", 50)),
        "required_for": ["fn-check"],
        "description": "Number of random rational points for pointwise checks"
    },
    "STOKES_USE_SYMPY_GCD": {
        "configured": bool(os.environ.get("STOKES_USE_SYMPY_GCD")),
        "value": os.environ.get("STOKES_USE_SYMPY_GCD", "1") != "0",
        "required_for": ["all"],
        "description": "Cancel common factors of non-monomial denominators with sympy"
    },
    "FLASK_PORT": {
        "configured": bool(os.environ.get("FLASK_PORT")),
        "value": int(os.environ.get("FLASK_PORT", 5005)),
        "required_for": ["app"],
        "description": "Port of this HTTP API"
    }
}

@app.route('/api/health', methods=['GET'])
def health():
    return jsonify({"status": "ok"})

@app.route('/api/config', methods=['GET'])
def get_config():
    """Returns which environment variables are configured and their effective values."""
    return jsonify(ENV_VAR_CONFIG)

# --- Checks ---
@app.route('/api/checks/<name>', methods=['POST'])
def run_named_check(name):
    """
    Run one check and return its report.

    Request body: the CLI parameters of the check, e.g.
    {
        "K": 2,
        "diagonal": 3,             // flip only
        "triangulation": {...}     // form / flip, optional
    }
    """
    if name not in CHECKS:
        return jsonify({"error": f"Unknown check: {name}"}), 404

    data = request.get_json(silent=True) or {}
    params = {k: v for k, v in data.items() if k != "triangulation"}
    try:
        if data.get("triangulation"):
            params["T"] = polygon.from_json(data["triangulation"])
            params.setdefault("K", params["T"].K)
        if isinstance(params.get("diagonal"), list):
            params["diagonal"] = tuple(params["diagonal"])
        report = run_check(name, params)
    except (StokesError, ValueError, TypeError) as e:
        return jsonify({"error": str(e)}), 400

    return jsonify(report.to_json())

# --- Triangulations ---
def _describe(T):
    Q = polygon.quiver_of(T)
    is_a, orientation = cluster.is_dynkin_a(Q)
    return {
        "triangulation": T.to_json(),
        "quiver": Q.to_json(),
        "dynkin_a": is_a,
        "orientation": orientation
    }

@app.route('/api/triangulation/fan', methods=['POST'])
def triangulation_fan():
    data = request.get_json(silent=True) or {}
    if "K" not in data:
        return jsonify({"error": "No K provided"}), 400
    try:
        K = int(data["K"])
        if K < 1:
            raise ValueError("K must be >= 1")
        return jsonify(_describe(polygon.fan_triangulation(K)))
    except (StokesError, ValueError, TypeError) as e:
        return jsonify({"error": str(e)}), 400

@app.route('/api/triangulation/flip', methods=['POST'])
def triangulation_flip():
    """
    Request body:
    {
        "triangulation": {...},
        "diagonal": 3          // label j, or [a, b]
    }
    """
    data = request.get_json(silent=True) or {}
    if not data.get("triangulation"):
        return jsonify({"error": "No triangulation provided"}), 400
    if data.get("diagonal") is None:
        return jsonify({"error": "No diagonal provided"}), 400
    try:
        T = polygon.from_json(data["triangulation"])
        d = data["diagonal"]
        d = tuple(d) if isinstance(d, list) else int(d)
        case = polygon.classify_flip(T, d)
        result = _describe(polygon.flip(T, d))
    except (StokesError, ValueError, TypeError) as e:
        return jsonify({"error": str(e)}), 400

    result["case"] = case.to_json()
    return jsonify(result)


if __name__ == '__main__':
    port = int(os.environ.get('FLASK_PORT', 5005))
    app.run(host='0.0.0.0', port=port, debug=True)
