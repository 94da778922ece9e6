import math

import gyrobloch as gb


u = gb.BlochVector.of(0.5, 0.0, 0.0)
v = gb.BlochVector.of(0.0, 0.5, 0.0)

w = gb.einstein_add(u, v)
rotation = gb.gyration(u, v)

print('u + v =', w.to_list())
print('gyr[u, v] =', rotation.to_rows())

rho_u, rho_v = gb.from_bloch(u), gb.from_bloch(v)
product = gb.odot(rho_u, rho_v)

print('rho_u (.) rho_v has bloch vector', product.bloch.to_list())

distance = gb.trace_metric(rho_u.matrix, rho_v.matrix)
lower = math.sqrt(2.0) * gb.rapidity_metric(u, v)

print(f'sqrt(2) rapidity {lower} <= trace metric {distance} <= {gb.prop_bound(u, v)}')

for suite_id in ('axioms', 'isomorphism', 'erratum'):
    report = gb.run_suite(suite_id, gb.TrialConfig(trials=200))
    print(report.json())
