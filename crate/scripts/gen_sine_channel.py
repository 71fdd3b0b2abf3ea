"""Emit closed-form Rust for the sine-channel manufactured solution.

u = -(y - gb)^2 (y - gt)^2 x^2 (1 - x)^2 (3 + sin(5x) sin(7y)),
gb = sin(pi x)/20, gt = 1 + sin(3 pi x)/20.

Prints a Rust module computing u, grad u, Hessian and the bilaplacian:

    python3 scripts/gen_sine_channel.py > crates/core/src/problem/sine_channel.rs
"""
import sympy as sp

x, y = sp.symbols("x y", real=True)
gb = sp.sin(sp.pi * x) / 20
gt = 1 + sp.sin(3 * sp.pi * x) / 20
u = -(y - gb) ** 2 * (y - gt) ** 2 * x ** 2 * (1 - x) ** 2 * (3 + sp.sin(5 * x) * sp.sin(7 * y))

ux, uy = sp.diff(u, x), sp.diff(u, y)
uxx, uxy, uyy = sp.diff(u, x, 2), sp.diff(u, x, y), sp.diff(u, y, 2)
f = sp.diff(u, x, 4) + 2 * sp.diff(u, x, 2, y, 2) + sp.diff(u, y, 4)

names = ["u", "ux", "uy", "uxx", "uxy", "uyy", "f"]
exprs = [u, ux, uy, uxx, uxy, uyy, f]
subs, reduced = sp.cse(exprs, optimizations="basic")

def rust(e):
    """Fully parenthesized f64 Rust expression."""
    if e.is_Symbol:
        return e.name
    if e == sp.pi:
        return "PI"
    if e.is_Integer or e.is_Rational:
        return f"({float(e)!r}_f64)"
    if e.is_Add:
        return "(" + " + ".join(rust(a) for a in e.args) + ")"
    if e.is_Mul:
        return "(" + " * ".join(rust(a) for a in e.args) + ")"
    if e.is_Pow:
        b, p = e.args
        if p.is_Integer:
            return f"{rust(b)}.powi({int(p)})"
        return f"{rust(b)}.powf({rust(p)})"
    if isinstance(e, sp.sin):
        return f"{rust(e.args[0])}.sin()"
    if isinstance(e, sp.cos):
        return f"{rust(e.args[0])}.cos()"
    raise ValueError(f"unsupported node {e.func}")

print("//! Generated by scripts/gen_sine_channel.py; do not edit.")
print()
print("use std::f64::consts::PI;")
print()
print("/// [u, u_x, u_y, u_xx, u_xy, u_yy, bilaplacian u] at (x, y).")
print("#[allow(unused_parens, clippy::all)]")
print("pub(crate) fn eval(x: f64, y: f64) -> [f64; 7] {")
for s, e in subs:
    print(f"    let {s} = {rust(e)};")
for n, e in zip(names, reduced):
    print(f"    let {n} = {rust(e)};")
print("    [" + ", ".join(names) + "]")
print("}")
