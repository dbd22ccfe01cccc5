#!/usr/bin/env python3
"""Regenerate the fixture corpus under corpus/.

Each case directory holds:
  program.jaxpr  text dump printed by jax.make_jaxpr
  data.npz       in_<i> arguments, const_<i> closed-over constants and
                 out_<i> reference results

The decompiled function is called as f(*inputs, *consts).
"""

import argparse
import pathlib
import shutil

import numpy as np

import jax
import jax.numpy as jnp
from jax import lax

jax.config.update("jax_platforms", "cpu")

GF_LISTING = """{ lambda ; a:f32[]. let
b:f32[] = exp a
c:f32[] = add 1.0 b
_:f32[] = log c
d:f32[] = div 1.0 c
e:f32[] = mul d b
in (e,) }
"""

rng = np.random.default_rng(20240917)


def f32(*shape, lo=-1.0, hi=1.0):
    return jnp.asarray(rng.uniform(lo, hi, size=shape), dtype=jnp.float32)


def i32(*shape, lo=0, hi=5):
    return jnp.asarray(rng.integers(lo, hi, size=shape), dtype=jnp.int32)


def softplus(x):
    return jnp.log(1 + jnp.exp(x))


def mlp_params():
    return (f32(4, 16), f32(16), f32(16, 2), f32(2))


def mlp(params, x):
    w1, b1, w2, b2 = params
    h = jnp.tanh(x @ w1 + b1)
    return h @ w2 + b2


def mlp_loss(w1, b1, w2, b2, x, y):
    pred = mlp((w1, b1, w2, b2), x)
    return jnp.mean((pred - y) ** 2)


def cumsum_scan(xs):
    return lax.scan(lambda c, x: (c + x, c + x), 0.0, xs)[1]


CASES = {
    "softplus_grad": (jax.grad(softplus), (jnp.float32(0.5),)),
    "elementwise_unary": (
        lambda a: (jnp.exp(a), jnp.log1p(a * a), jnp.sin(a), jnp.cos(a), jnp.tan(a),
                   jnp.tanh(a), jnp.sqrt(jnp.abs(a)), lax.rsqrt(a * a + 1), jnp.sign(a),
                   jnp.floor(a), jnp.ceil(a), -a, jnp.expm1(a), jnp.exp2(a)),
        (f32(3, 4),)),
    "elementwise_binary": (
        lambda a, b: (a + b, a - b, a * b, a / (b * b + 1), jnp.maximum(a, b),
                      jnp.minimum(a, b), jnp.abs(a) ** b, jnp.arctan2(a, b), a ** 3,
                      lax.rem(a, 0.3)),
        (f32(5), f32(5))),
    "inverse_trig": (
        lambda a: (jnp.arcsin(a), jnp.arccos(a), jnp.arctan(a), jnp.sinh(a),
                   jnp.cosh(a), jnp.arcsinh(a), jnp.arctanh(a * 0.5),
                   jnp.arccosh(a + 2.0), jnp.cbrt(a), jnp.square(a)),
        (f32(6),)),
    "comparisons": (
        lambda a, b: (a < b, a <= b, a > b, a >= b, a == b, a != b,
                      jnp.logical_and(a > 0, b > 0) | jnp.logical_not(a > 0.5),
                      jnp.logical_xor(a > 0, b > 0), jnp.isfinite(a / b)),
        (f32(7), f32(7))),
    "integer_bits": (
        lambda a: (a << 1, a >> 1, ~a, a & 3, a | 4, a ^ 1, lax.div(a - 2, 3),
                   lax.rem(a - 2, 3), a * 2 - 1),
        (i32(6, lo=-8, hi=8),)),
    "logistic_special": (
        lambda a: (jax.nn.sigmoid(a), jax.scipy.special.erf(a), jax.scipy.special.erfc(a),
                   jax.scipy.special.erfinv(a * 0.9), jax.scipy.special.gammaln(a + 2.0),
                   jax.scipy.special.digamma(a + 2.0)),
        (f32(5),)),
    "rounding": (
        lambda a: (jnp.round(a * 3), lax.round(a * 3), lax.round(a * 3, lax.RoundingMethod.TO_NEAREST_EVEN)),
        (jnp.asarray([0.5, 1.5, -0.5, -2.5, 0.2], dtype=jnp.float32),)),
    "casts": (
        lambda a: (a.astype(jnp.int32), a.astype(jnp.bool_), (a > 0).astype(jnp.float32),
                   lax.bitcast_convert_type(a, jnp.int32), a.astype(jnp.float16)),
        (f32(4, lo=-5, hi=5),)),
    "where_select": (
        lambda a, k: (jnp.where(a > 0, a, 0.0), lax.select_n(k, a, a * 2, a * 3),
                      jnp.clip(a, -0.5, 0.5), lax.clamp(-0.2, a, 0.2)),
        (f32(6), i32(6, hi=3))),
    "reductions": (
        lambda a: (jnp.sum(a, axis=0), jnp.max(a, axis=1), jnp.min(a), jnp.prod(a, axis=0),
                   jnp.all(a > -0.5, axis=1), jnp.any(a > 0.9), jnp.argmax(a, axis=1),
                   jnp.argmin(a, axis=0), jnp.mean(a)),
        (f32(3, 4),)),
    "integer_sum": (lambda a: (jnp.sum(a), jnp.cumsum(a), jnp.prod(a, axis=0)), (i32(4, 3, lo=1, hi=4),)),
    "cumulative": (
        lambda a: (jnp.cumsum(a, axis=1), jnp.cumprod(a, axis=0), lax.cummax(a, axis=1),
                   lax.cummin(a, axis=0, reverse=True), lax.cumsum(a, axis=0, reverse=True)),
        (f32(3, 4),)),
    "shapes": (
        lambda a: (a.T, a.reshape(4, 3), jnp.expand_dims(a, 0), jnp.squeeze(a[None]),
                   jnp.flip(a, 1), jnp.concatenate([a, a * 2], 0), jnp.broadcast_to(a[0], (2, 4))),
        (f32(3, 4),)),
    "slicing": (lambda a: (a[0:2, 1:3], a[:, ::2], a[1], a[::-1]), (f32(4, 5),)),
    "split_pad": (
        lambda a: (*jnp.split(a, [1, 3], axis=1), jnp.pad(a, ((1, 0), (0, 2))),
                   lax.pad(a, 0.5, ((0, 1, 0), (1, 1, 0)))),
        (f32(2, 4),)),
    "iota_eye": (lambda a: (a + jnp.arange(4), a + jnp.eye(4)[:3], jnp.arange(6).reshape(2, 3)), (f32(3, 4),)),
    "matmul": (lambda a, b, v: (a @ b, b.T @ v, jnp.dot(v, v), a @ b[:, 0]), (f32(2, 3), f32(3, 4), f32(3))),
    "tensordot": (lambda a, b: jnp.tensordot(a, b, axes=([0], [0])), (f32(3, 2), f32(3, 4))),
    "batched_matmul": (lambda a, b: jnp.einsum("bij,bjk->bik", a, b), (f32(2, 3, 4), f32(2, 4, 2))),
    "vmap_dot": (jax.vmap(lambda r: jnp.dot(r, r)), (f32(3, 4),)),
    "dynamic_index": (lambda a, k: (a[k], lax.dynamic_slice(a, (k, 1), (2, 2)),
                                    lax.dynamic_update_slice(a, jnp.zeros((1, 2)), (k, 0))),
                      (f32(4, 3), jnp.int32(1))),
    "gather_rows": (lambda a, k: a[k], (f32(5, 3), i32(4, hi=5))),
    "scatter": (lambda a, k: (a.at[k].set(1.0), a.at[k].add(2.0), a.at[k].mul(3.0), a.at[k].max(0.5)),
                (f32(4, 3), jnp.asarray([0, 2], dtype=jnp.int32))),
    "sort_take3": (lambda a: jnp.sort(a)[:3], (f32(8),)),
    "sort_pairs": (lambda a, b: (jnp.argsort(a), lax.sort((a, b), num_keys=1)), (f32(6), f32(6))),
    "top_k": (lambda a: lax.top_k(a, 2), (f32(2, 5),)),
    "conv": (lambda a, w: lax.conv(a, w, (1, 1), "VALID"), (f32(1, 1, 4, 4), f32(1, 1, 2, 2))),
    "cond_two_branch": (lambda p, a: lax.cond(p, lambda y: y + 1, lambda y: y - 1, a), (jnp.bool_(True), f32(3))),
    "switch_three": (lambda k, a: lax.switch(k, [lambda y: y, lambda y: y * 2, lambda y: -y], a), (jnp.int32(2), f32(3))),
    "while_loop": (lambda a: lax.while_loop(lambda c: c[0] < 5, lambda c: (c[0] + 1, c[1] * 1.5), (0, a)), (f32(3),)),
    "while_consts": (lambda x, y: lax.while_loop(lambda c: c < y, lambda c: c + x, 0.0), (jnp.float32(0.7), jnp.float32(5.0))),
    "fori_loop": (lambda a: lax.fori_loop(0, 4, lambda i, c: c * 2 + i, a), (f32(2),)),
    "scan_cumsum": (cumsum_scan, (jnp.asarray([1.0, 2.0, 3.0], dtype=jnp.float32),)),
    "scan_reverse": (lambda a: lax.scan(lambda c, y: (c * y, c), 1.0, a, reverse=True), (f32(4),)),
    "scan_consts": (lambda a, xs: lax.scan(lambda c, z: (c + z * a, None), 0.0, xs)[0], (jnp.float32(0.3), f32(5))),
    "scan_in_cond": (lambda a: lax.cond(a.sum() > 0, lambda y: lax.scan(lambda c, z: (c + z, c), 0.0, y)[1],
                                        lambda y: y, a), (f32(4, lo=0.1, hi=1.0),)),
    "pjit_nested": (lambda a: jnp.remainder(a, 0.4) + jnp.floor_divide(a, 0.3) + jnp.var(a), (f32(5),)),
    "custom_jvp": (lambda a: jax.nn.relu(a) + jax.nn.softplus(a) + jnp.logaddexp(a, 0.5), (f32(5),)),
    "custom_vjp": (None, (f32(3),)),  # filled below
    "checkpoint": (jax.checkpoint(lambda y: jnp.sin(y) * 2), (f32(3),)),
    "softmax": (jax.nn.softmax, (f32(2, 5),)),
    "constants": (lambda a: a + jnp.asarray([1.0, 2.0, 3.0]) * jnp.asarray([[2.0], [3.0]]), (f32(2, 3),)),
    "pmap": (jax.pmap(lambda y: y * 2 + 1), (f32(1, 3),)),
    "mlp_forward": (lambda w1, b1, w2, b2, x: mlp((w1, b1, w2, b2), x), (*mlp_params(), f32(8, 4))),
    "mlp_grad": (jax.grad(mlp_loss, argnums=(0, 1, 2, 3)), (*mlp_params(), f32(8, 4), f32(8, 2))),
    "keyword_names": (None, ()),  # hand-written below
}


@jax.custom_vjp
def _vjp_sin(x):
    return jnp.sin(x)


_vjp_sin.defvjp(lambda x: (jnp.sin(x), x), lambda r, g: (g * jnp.cos(r),))
CASES["custom_vjp"] = (_vjp_sin, CASES["custom_vjp"][1])

# Variable names that collide with Python keywords and emitted names.
KEYWORD_NAMES = """{ lambda ; in:f32[3] is:f32[3]. let
    if:f32[3] = add in is
    exp:f32[3] = exp if
    fn_0:f32[3] = mul exp 2.0:f32[]
    IN:f32[3] = sub fn_0 in
  in (IN,) }
"""


def save_case(root, name, text, args, consts, outs):
    case = root / name
    case.mkdir(parents=True, exist_ok=True)
    (case / "program.jaxpr").write_text(text)
    arrays = {}
    for i, a in enumerate(args):
        arrays[f"in_{i}"] = np.asarray(a)
    for i, c in enumerate(consts):
        arrays[f"const_{i}"] = np.asarray(c)
    for i, o in enumerate(outs):
        arrays[f"out_{i}"] = np.asarray(o)
    np.savez(case / "data.npz", **arrays)


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", default=str(pathlib.Path(__file__).resolve().parent.parent / "corpus"))
    opts = parser.parse_args()
    root = pathlib.Path(opts.out)
    if root.exists():
        shutil.rmtree(root)
    root.mkdir(parents=True)

    x = np.float32(0.5)
    save_case(root, "gf_listing", GF_LISTING, (x,), (), (jax.grad(softplus)(x),))
    args = (jnp.asarray([0.1, 0.2, 0.3], dtype=jnp.float32), jnp.asarray([1.0, -1.0, 2.0], dtype=jnp.float32))
    s = args[0] + args[1]
    out = (jnp.exp(s) * 2.0) * 1.0 - args[0]
    save_case(root, "keyword_names", KEYWORD_NAMES, args, (), (out,))

    for name, (fn, args) in CASES.items():
        if name == "keyword_names":
            continue
        closed = jax.make_jaxpr(fn)(*args)
        outs = jax.tree_util.tree_leaves(fn(*args))
        save_case(root, name, str(closed) + "\n", args, closed.consts, outs)
    print(f"wrote {len(list(root.iterdir()))} cases to {root}")


if __name__ == "__main__":
    main()
