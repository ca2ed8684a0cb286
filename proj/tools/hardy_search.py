#!/usr/bin/env python3
# Copyright 2026 The bellconf Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Numeric search for the Hardy configuration embedded in src/bell/universality.cc.

State: cos(t)|00> + sin(t)|11>. Both parties use the same XZ-plane half-angles
{alpha, alpha_prime}; outcome "+" is the +1 eigenvector (cos phi, sin phi).

Maximizes P(+,+|alpha,alpha) subject to
    P(+,-|alpha,alpha')  = 0
    P(-,+|alpha',alpha)  = 0   (equal to the above by party symmetry)
    P(+,+|alpha',alpha') = 0

Stage 1 runs a grid over (t, alpha, alpha') with a quadratic penalty on the
premises, followed by coordinate refinement down to a 1e-6 step. Stage 2
projects the result onto the constraint surface, where the two independent
premises fix t and alpha in closed form given alpha':
    tan t     = -cot^2 alpha'
    tan alpha = cot t * tan alpha'
and refines alpha' alone to machine precision.
"""

import math

PENALTY = 1e3


def amp(t, x, sx, y, sy):
    # sx, sy select the + (0) or - (1) eigenvector.
    ux = (math.cos(x), math.sin(x)) if sx == 0 else (-math.sin(x), math.cos(x))
    uy = (math.cos(y), math.sin(y)) if sy == 0 else (-math.sin(y), math.cos(y))
    return math.cos(t) * ux[0] * uy[0] + math.sin(t) * ux[1] * uy[1]


def terms(p):
    t, a, ap = p
    p_imp = amp(t, a, 0, a, 0) ** 2
    premises = (amp(t, a, 0, ap, 1) ** 2, amp(t, ap, 1, a, 0) ** 2,
                amp(t, ap, 0, ap, 0) ** 2)
    return p_imp, premises


def penalized(p):
    p_imp, premises = terms(p)
    return p_imp - PENALTY * sum(premises)


def refine(f, x, step, stop):
    x = list(x)
    fx = f(x)
    while step > stop:
        moved = False
        for i in range(len(x)):
            for d in (step, -step):
                trial = list(x)
                trial[i] += d
                ft = f(trial)
                if ft > fx:
                    x, fx, moved = trial, ft, True
        if not moved:
            step /= 2
    return x


def on_surface(alpha_prime):
    t = math.atan(-1.0 / math.tan(alpha_prime) ** 2)
    alpha = math.atan(math.tan(alpha_prime) / math.tan(t))
    return [t, alpha, alpha_prime]


def main():
    n = 48
    grid = [-math.pi / 2 + math.pi * k / n for k in range(n + 1)]
    best = max(([t, a, ap] for t in grid for a in grid for ap in grid),
               key=penalized)
    best = refine(penalized, best, math.pi / n, 1e-6)
    ap = refine(lambda v: terms(on_surface(v[0]))[0], [best[2]], 1e-3, 1e-15)
    p = on_surface(ap[0])
    p_imp, premises = terms(p)
    print(f"stage1      = {best} p_imp={terms(best)[0]:.9f}")
    print(f"theta       = {p[0]:.17g}")
    print(f"alpha       = {p[1]:.17g}")
    print(f"alpha_prime = {p[2]:.17g}")
    print(f"p_imp       = {p_imp:.17g}")
    print(f"premises    = {premises}")
    print(f"golden      = {(5 * math.sqrt(5) - 11) / 2:.17g}")


if __name__ == "__main__":
    main()
