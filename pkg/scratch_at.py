"""Probe: which (eps, lr, epochs, steps) make adversarial training work on shapes."""
import itertools
import sys
import time

import torch

from robuda.attacks import AttackSpec, adversarial_train, robust_accuracy
from robuda.data import make_shapes_pair
from robuda.models import ClassifierHead, build_extractor

t0 = time.time()
ARCH = {"family": "cnn", "blocks": 2, "width": 12, "feature_dim": 48}
pair = make_shapes_pair(n_source=1500, n_target=1500, n_target_eval=384, seed=0,
                        target_style="textured", cue_strength=0.0)
# held-out source-style eval set
src_eval_pair = make_shapes_pair(n_source=8, n_target=8, n_target_eval=384, seed=99,
                                 target_style="flat")
src_eval = src_eval_pair.target_eval

combos = [
    # eps, lr, epochs, steps
    (16.0, 0.05, 8, 5),
    (24.0, 0.02, 12, 7),
    (32.0, 0.02, 12, 7),
    (48.0, 0.01, 16, 7),
]
for eps, lr, epochs, steps in combos:
    torch.manual_seed(0)
    model = build_extractor(ARCH, pair.input_shape)
    head = ClassifierHead(model.feature_dim, 4)
    try:
        adversarial_train(model, head, pair.source,
                          AttackSpec(norm="linf", eps=eps, steps=steps), epochs=epochs,
                          lr=lr, batch_size=64, seed=0)
    except Exception as exc:
        print(f"eps={eps} lr={lr}: DIVERGED {exc}")
        continue
    msg = [f"eps={eps:4.0f} lr={lr} ep={epochs}"]
    for name, split in (("src", src_eval), ("tgt", pair.target_eval)):
        for ev_eps in (eps, 16.0, 32.0):
            rep = robust_accuracy(model, head, split,
                                  AttackSpec(norm="linf", eps=ev_eps, steps=20),
                                  generator=torch.Generator().manual_seed(0))
            msg.append(f"{name}@{ev_eps:.0f}: {rep.clean_accuracy:.2f}/{rep.robust_accuracy:.2f}")
    print(f"[{time.time()-t0:6.1f}s] " + "  ".join(msg))
