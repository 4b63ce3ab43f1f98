"""
Subcommands
===========

``persist``, ``path`` and ``compare``: each reads its inputs, runs the library
pipeline and writes its outputs atomically.
"""

import logging
import time
from dataclasses import replace

import numpy as np

from geometry import distance_matrix, jitter, load_point_cloud
from inference import compare, save_result
from lattice import dyck_word, encode, save_lattice_path, save_step_function, to_birth_death_process
from persistence import augment_h0, h0_persistence, h1_persistence, load_diagram, save_diagram
from render import save_png, save_svg
from utils.errors import EmptyDiagramError
from utils.serialization import to_json_text, write_atomic

logger = logging.getLogger(__name__)


def prepare_diagram(diagram):
    """Make a diagram encodable: an H0 diagram with all births 0 gets augmented births"""
    if diagram.dim == 0 and diagram.q > 0 and all(b == 0 for b in diagram.births):
        augmented = augment_h0(diagram)
        logger.info("Augmented H0 births with delta=%g", augmented.provenance["augment_delta"])
        return augmented
    return diagram


def cmd_persist(config):
    """Point cloud file to persistence diagram JSON

    Returns:
        PersistenceDiagram: The diagram written to ``config.output``
    """
    started = time.perf_counter()
    cloud = load_point_cloud(config.inputs[0], config.fmt, config.selection,
                             include_hetatm=config.include_hetatm)
    if config.jitter is not None:
        cloud = jitter(cloud, config.jitter, config.jitter_seed)
    dtype = np.float32 if config.float32 else np.float64
    dm = distance_matrix(cloud, dtype=dtype)

    if config.dim == 0:
        diagram = h0_persistence(dm, config.max_eps)
    else:
        diagram = h1_persistence(dm, config.max_eps, budget=config.simplex_budget)

    provenance = {
        "input": cloud.source,
        "n_points": cloud.n,
        **cloud.provenance,
        **diagram.provenance,
        "dtype": np.dtype(dtype).name,
        "total_persistence": diagram.total_persistence(),
    }
    diagram = replace(diagram, provenance=provenance)
    save_diagram(diagram, config.output)

    logger.info("persist: n=%d, q=%d, dropped_infinite=%d, max_eps=%s, %.3f s",
                cloud.n, diagram.q, diagram.dropped_infinite, diagram.max_eps,
                time.perf_counter() - started)
    return diagram


def path_outputs(prefix):
    """Output file names of the path subcommand"""
    return {
        "path": f"{prefix}.path.csv",
        "step": f"{prefix}.step.csv",
        "encoding": f"{prefix}.encoding.json",
        "svg": f"{prefix}.svg",
        "png": f"{prefix}.png",
    }


def cmd_path(config):
    """Diagram JSON to lattice path CSV, step function CSV and encoding JSON

    Returns:
        StepFunction: The encoded step function

    Raises:
        EmptyDiagramError: If the diagram has no finite pairs
    """
    source = config.inputs[0]
    diagram = load_diagram(source)
    if diagram.q == 0:
        raise EmptyDiagramError(
            f"{source} has no finite pairs; a lattice path needs at least one (birth, death) pair")
    diagram = prepare_diagram(diagram)

    step = encode(diagram, config.delta)
    path = dyck_word(to_birth_death_process(diagram))
    outputs = path_outputs(config.output)

    enc = step.encoding
    encoding = {
        "source": source,
        "q": step.q,
        "steps": str(path),
        "delta": step.delta,
        "scale": step.scale,
        "dim": enc.dim,
        "births": list(enc.births),
        "first_death": enc.first_death,
        "order": list(enc.order),
        "offsets": list(enc.offsets),
        "dropped_infinite": enc.dropped_infinite,
        "max_eps": enc.max_eps,
        "augment_delta": diagram.provenance.get("augment_delta"),
    }
    save_lattice_path(path, outputs["path"])
    save_step_function(step, outputs["step"])
    write_atomic(outputs["encoding"], to_json_text(encoding))
    title = f"q = {step.q}"
    if config.svg:
        save_svg(step, outputs["svg"], title)
    if config.png:
        save_png(step, outputs["png"], title)

    logger.info("path: q=%d, delta=%g, scale=%g", step.q, step.delta, step.scale)
    return step


def cmd_compare(config):
    """Two diagram JSON files to an inference result JSON and a printed summary

    Returns:
        InferenceResult: The result written to ``config.output``
    """
    path_a, path_b = config.inputs
    diag_a = prepare_diagram(load_diagram(path_a))
    diag_b = prepare_diagram(load_diagram(path_b))

    result = compare(diag_a, diag_b, methods=config.methods, mode=config.sequence,
                     delta=config.delta, n_perm=config.n_perm, seed=config.seed,
                     series=config.series)
    provenance = {
        "a": path_a,
        "b": path_b,
        "methods": [m.value for m in config.methods],
        **result.provenance,
    }
    result = replace(result, provenance=provenance)
    save_result(result, config.output)
    print(result.summary())
    return result


COMMANDS = {
    "persist": cmd_persist,
    "path": cmd_path,
    "compare": cmd_compare,
}


def run(config):
    """Dispatch a validated RunConfig to its subcommand"""
    return COMMANDS[config.subcommand](config)
