"""Probe noise_level: baseline clean/rob on harder targets, teacher quality."""
import sys
import time

import torch

from robuda.attacks import AttackSpec, adversarial_train, robust_accuracy
from robuda.data import make_shapes_pair
from robuda.models import ClassifierHead, build_extractor

t0 = time.time()
ARCH = {"family": "cnn", "blocks": 2, "width": 12, "feature_dim": 48}
CUE = 0.05

for nl in (1.5, 2.0, 2.5):
    pair = make_shapes_pair(n_source=1500, n_target=1500, n_target_eval=384, seed=0,
                            target_style="textured", cue_strength=CUE, noise_level=nl)
    rows = []
    for name, spec, lr, epochs in (
        ("plain", AttackSpec(norm="linf", eps=0.0, steps=1, random_start=False), 0.05, 8),
        ("at24", AttackSpec(norm="linf", eps=24.0, steps=7), 0.02, 12),
        ("at32", AttackSpec(norm="linf", eps=32.0, steps=7), 0.02, 12),
    ):
        torch.manual_seed(0)
        model = build_extractor(ARCH, pair.input_shape)
        head = ClassifierHead(model.feature_dim, 4)
        adversarial_train(model, head, pair.source, spec, epochs=epochs, lr=lr,
                          batch_size=64, seed=0)
        rep = robust_accuracy(model, head, pair.target_eval,
                              AttackSpec(norm="linf", eps=16.0, steps=20),
                              generator=torch.Generator().manual_seed(0))
        rows.append(f"{name}: {rep.clean_accuracy:.2f}/{rep.robust_accuracy:.2f}")
    print(f"[{time.time()-t0:6.1f}s] nl={nl}: " + "  ".join(rows))
