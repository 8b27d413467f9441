"""
Initial states from their JSON description.

Accepted forms (all keys besides "kind" optional unless noted):

    {"kind": "point", "coords": "x1x2", "position": [0, 5], "coin": [...]}
    {"kind": "sigma_segment", "rho_profile": "near_dimer_fermion",
     "sigma_start": -13, "sigma_stop": 13}
    {"kind": "sigma_segment", "rho_profile": "rho_sites", "rho_sites": [-1, 1],
     "coin": [...], "sigma_start": -13, "sigma_stop": 13}
    {"kind": "sigma_segment", "rho_profile": [[rho, [c_R, c_D, c_U, c_L]], ...], ...}
    {"kind": "gaussian_pair", "centers": [300, -300], "width": 10,
     "momenta": [k1, k2], "coin": [...]}

A coin is four complex numbers (each a number, a "a+bj" string or an
[re, im] pair), or {"first": [u, d], "second": [u, d]} for a product of two
single-walker coins. Named profiles "near_dimer_<branch>" take the k = 0
closed-form state of that branch.
"""

from typing import Any, Dict

from utils.errors import ConfigError, WalkError
from walk.types import CoinVector, Coords, WalkParams

NEAR_DIMER_PREFIX = "near_dimer_"


def coin_from_json(value) -> CoinVector:
    if isinstance(value, dict):
        try:
            return CoinVector.product(
                [complex(*v) if isinstance(v, list) else complex(v) for v in value["first"]],
                [complex(*v) if isinstance(v, list) else complex(v) for v in value["second"]],
            )
        except KeyError as e:
            raise ConfigError(f"Product coin needs 'first' and 'second', missing {e}") from None
    return CoinVector.from_array(value)


def _extents(data: Dict[str, Any]):
    extents = data.get("extents")
    if extents is None:
        return None
    return (tuple(int(v) for v in extents[0]), tuple(int(v) for v in extents[1]))


def _profile(data: Dict[str, Any], params: WalkParams):
    from boundstates.analytic import build_near_dimer, rho_profile_of

    profile = data.get("rho_profile")
    if isinstance(profile, str):
        if profile == "rho_sites":
            coin = coin_from_json(data.get("coin", [1, 0, 0, 0]))
            return {int(rho): coin for rho in data.get("rho_sites", [])}, "rho_sites"
        if profile.startswith(NEAR_DIMER_PREFIX):
            state = build_near_dimer(profile[len(NEAR_DIMER_PREFIX):], params.phi, params)
            return rho_profile_of(state), profile
        raise ConfigError(f"Unknown rho profile '{profile}'")
    if isinstance(profile, list):
        return {int(rho): coin_from_json(amps) for rho, amps in profile}, "custom"
    raise ConfigError("sigma_segment needs a rho_profile")


def initial_from_dict(data: Dict[str, Any], params: WalkParams):
    from evolution.initial_state import InitialKind, InitialStateSpec

    kind = str(data.get("kind", "")).lower()
    try:
        if kind == InitialKind.POINT.value:
            return InitialStateSpec.point(
                position=data.get("position", [0, 0]),
                coin0=coin_from_json(data.get("coin", [1, 0, 0, 0])),
                coords=Coords.parse(data.get("coords", "x1x2")),
                extents=_extents(data),
            )
        if kind == InitialKind.SIGMA_SEGMENT.value:
            profile, label = _profile(data, params)
            return InitialStateSpec.sigma_segment(
                profile,
                sigma_start=int(data.get("sigma_start", -13)),
                sigma_stop=int(data.get("sigma_stop", 13)),
                extents=_extents(data),
                label=label,
            )
        if kind == InitialKind.GAUSSIAN_PAIR.value:
            return InitialStateSpec.gaussian_pair(
                centers=data.get("centers", [0, 0]),
                width=float(data.get("width", 1.0)),
                momenta=data.get("momenta", [1.5707963267948966, 1.5707963267948966]),
                coin0=coin_from_json(data.get("coin", [1, 0, 0, 0])),
                extents=_extents(data),
            )
    except WalkError:
        raise
    except (TypeError, ValueError) as e:
        raise ConfigError(f"Invalid initial state {data!r}: {e}") from None
    raise ConfigError(f"Unknown initial state kind '{kind}' (point, sigma_segment, gaussian_pair)")
