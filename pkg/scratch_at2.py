"""Probe 2: plain-model robustness, weak-init budgets, l2 teachers."""
import time

import torch

from robuda.attacks import AttackSpec, adversarial_train, robust_accuracy
from robuda.data import make_shapes_pair
from robuda.models import ClassifierHead, build_extractor

t0 = time.time()
ARCH = {"family": "cnn", "blocks": 2, "width": 12, "feature_dim": 48}
pair = make_shapes_pair(n_source=1500, n_target=1500, n_target_eval=384, seed=0,
                        target_style="textured", cue_strength=0.0)

def eval_at(model, head, eps_list):
    parts = []
    for ev in eps_list:
        rep = robust_accuracy(model, head, pair.target_eval,
                              AttackSpec(norm="linf", eps=ev, steps=20),
                              generator=torch.Generator().manual_seed(0))
        parts.append(f"tgt@{ev:g}: {rep.clean_accuracy:.2f}/{rep.robust_accuracy:.2f}")
    return "  ".join(parts)

combos = [
    ("plain", AttackSpec(norm="linf", eps=0.0, steps=1, random_start=False), 0.05, 8),
    ("weak8", AttackSpec(norm="linf", eps=8.0, steps=5), 0.05, 8),
    ("weak16", AttackSpec(norm="linf", eps=16.0, steps=5), 0.05, 8),
    ("l2_600", AttackSpec(norm="l2", eps=600.0, steps=7), 0.02, 12),
    ("l2_900", AttackSpec(norm="l2", eps=900.0, steps=7), 0.02, 12),
]
for name, spec, lr, epochs in combos:
    torch.manual_seed(0)
    model = build_extractor(ARCH, pair.input_shape)
    head = ClassifierHead(model.feature_dim, 4)
    try:
        adversarial_train(model, head, pair.source, spec, epochs=epochs, lr=lr,
                          batch_size=64, seed=0)
    except Exception as exc:
        print(f"{name}: DIVERGED {exc}")
        continue
    print(f"[{time.time()-t0:6.1f}s] {name:8s} {eval_at(model, head, [8.0, 16.0, 24.0])}")
