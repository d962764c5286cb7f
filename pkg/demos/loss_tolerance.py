"""Detection loss hurts the truncated scheme far more than the full interferometer.

Run: python demos/loss_tolerance.py
"""

from sui_metrology import SchemeConfig, run_scheme

print(f"{'eta_det':>8} {'dual-beam dB':>13} {'truncated dB':>13}")
for eta in (0.0, 0.1, 0.25, 0.5):
    common = dict(g1_power_gain=2.5, seeding="balanced", eta_det_s=eta, eta_det_i=eta)
    dual = run_scheme(SchemeConfig(kind="dual_beam_sui", g2_power_gain=1e4, **common))
    trunc = run_scheme(SchemeConfig(kind="truncated_dual", **common))
    print(f"{eta:8.2f} {dual.improvement_db('hd1'):13.3f} {trunc.improvement_db('jm_opt'):13.3f}")
