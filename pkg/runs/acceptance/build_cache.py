"""Build every cached acceptance artifact, sequentially.

Run from the repo root:  nohup python3 runs/acceptance/build_cache.py &

Order: the control fixtures first (they double as a calibration check for
the hard-target step heights), then the desk-scale runs.  If a foreground
desk_s1 run is still going, we wait for it before touching the run caches.
"""

import json
import subprocess
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent.parent / "tests"))

import acceptance_utils as au


def log(msg):
    print(f"[{time.strftime('%H:%M:%S')}] {msg}", flush=True)


def foreign_run_active():
    out = subprocess.run(["pgrep", "-f", "openpoet.cli run"],
                         capture_output=True, text=True)
    return bool(out.stdout.strip())


def main():
    log("flat-terrain training (5 seeds)")
    flat = au.flat_solves()
    log(f"flat_solves: {json.dumps(flat)}")

    log("easy control (gentle slope, direct)")
    easy = au.easy_control()
    log(f"easy_control: solved={easy['solved']} steps={easy['es_steps']} "
        f"best={easy['best_score']:.1f}")

    log("hard-target control fixture (lineage vs direct)")
    fx = au.control_fixture()
    log(f"control_fixture: lineage_solved={fx['lineage_solved']} "
        f"mid={fx['mid']} tall={fx['tall']} "
        f"direct_solved={fx['direct']['solved']} "
        f"direct_best={fx['direct']['best_score']:.1f} "
        f"budget={fx['lineage_frames']}")

    while foreign_run_active():
        log("waiting for the foreground desk run to finish")
        time.sleep(120)

    for name, seed, mode, workers in [
        ("desk_s1", 1, "improved", 1),
        ("desk_s2", 2, "improved", 1),
        ("desk_s3", 3, "improved", 1),
        ("desk_s4", 4, "improved", 1),
        ("desk_s5", 5, "improved", 1),
        ("orig_s1", 1, "original", 1),
        ("noft_s1", 1, "no_finetune", 1),
        ("desk_w8", 1, "improved", 8),
    ]:
        t0 = time.time()
        state, _ = au.desk_run(name, seed, mode, workers)
        log(f"{name}: iter={state.iteration} annecs={state.annecs.annecs} "
            f"active={len(state.active)} archived={len(state.archive)} "
            f"finetune={state.finetune_steps} "
            f"direct={state.direct_transfer_evals} "
            f"({time.time() - t0:.0f}s)")

    log("cache complete")


if __name__ == "__main__":
    main()
