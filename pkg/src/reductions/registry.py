# src/reductions/registry.py
import importlib
import inspect
import logging
from pathlib import Path
from typing import Dict, Type

from src.reductions.interface import Reduction

logger = logging.getLogger(__name__)

_cache: Dict[str, Type[Reduction]] = {}


def discover_reductions() -> Dict[str, Type[Reduction]]:
    if _cache:
        return dict(_cache)
    package_path = Path(__file__).parent
    logger.debug(f"Scanning for reductions in: {package_path}")
    for module_file in sorted(package_path.glob("*.py")):
        if module_file.stem in ("__init__", "interface", "registry"):
            continue
        module_name = f"src.reductions.{module_file.stem}"
        try:
            module = importlib.import_module(module_name)
        except ImportError as e:
            logger.warning(f"Could not import or inspect reduction module '{module_name}': {e}")
            continue
        for _, obj_class in inspect.getmembers(module, inspect.isclass):
            if issubclass(obj_class, Reduction) and obj_class is not Reduction and not inspect.isabstract(obj_class):
                _cache[obj_class.NAME] = obj_class
                logger.debug(f" -> Discovered reduction: '{obj_class.NAME}'")
    return dict(_cache)


def get_reduction(name: str) -> Reduction:
    reductions = discover_reductions()
    if name not in reductions:
        raise KeyError(f"unknown reduction '{name}', known: {', '.join(sorted(reductions))}")
    return reductions[name]()
