"""Walk through the experimental preset: improvements, mixer gain and the information tap.

Run: python demos/experiment_preset.py
"""

from sui_metrology import load_preset, run_scheme

result = run_scheme(load_preset("experiment-2018"))
print(f"mismatch loss at the second amplifier: {result.config.eta_mismatch:.4f}")
for port in ("hd1", "hd2", "jm", "jm_opt"):
    print(f"{port:>6}: {result.improvement_db(port, lossy=True):5.2f} dB over the lossy coherent probe, "
          f"{result.improvement_db(port):5.2f} dB over the lossless one")
print(f"optimal idler gain k = {result.k_opt:.3f}")
t = result.transfer
print(f"transfer coefficients T_s = {t.t_s:.3f}, T_i = {t.t_i:.3f}, sum = {t.total:.3f} (> 1: quantum tap)")

truncated = run_scheme(load_preset("experiment-2018-truncated"))
print(f"truncated scheme, same losses: {truncated.improvement_db('jm', lossy=True):.2f} dB")
