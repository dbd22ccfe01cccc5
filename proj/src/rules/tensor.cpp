#include <algorithm>

#include "rules/rules.hpp"

namespace jaxpr2py::rules {

namespace {

Statements one(const Equation& eq, TranslationContext& ctx,
               const std::string& expr) {
  return {assign(ctx.bind_outputs(eq), expr)};
}

std::string axes_tuple(const std::vector<std::int64_t>& axes) {
  return int_tuple(axes);
}

const ParamTuple& tuple_param(const Equation& eq, const ParamValue& v,
                              const std::string& what) {
  const auto* t = std::get_if<ParamTuple>(&v.value);
  if (!t) throw TranslationError(eq.primitive, what + " of '" + eq.primitive + "' is not a tuple");
  return *t;
}

std::vector<std::int64_t> ints_of(const Equation& eq, const ParamValue& v,
                                  const std::string& what) {
  auto ints = as_ints(v);
  if (!ints) throw TranslationError(eq.primitive, what + " of '" + eq.primitive + "' is not an integer tuple");
  return *ints;
}

std::size_t rank_of(const Equation& eq, const Atom& atom, TranslationContext& ctx) {
  auto type = ctx.type_of(atom);
  if (!type) {
    throw TranslationError(eq.primitive, "'" + eq.primitive +
                                             "' needs annotated operand types");
  }
  return type->rank();
}

RenderFn reduction(std::string fn, bool sums) {
  return [fn, sums](const Equation& eq, TranslationContext& ctx) {
    check_arity(eq, 1, 1);
    std::string args = ctx.operand(eq.inputs[0]) +
                       ", axis=" + axes_tuple(param_ints(eq, "axes"));
    // numpy widens small integer sums to the platform integer.
    const auto out = output_type(eq);
    if (sums && !ctx.framework() && out && is_integer(out->dtype)) {
      args += ", dtype=" + dtype_name(eq, out->dtype, false);
    }
    return one(eq, ctx, ctx.call(fn, args));
  };
}

RenderFn arg_reduction(std::string fn) {
  return [fn](const Equation& eq, TranslationContext& ctx) {
    check_arity(eq, 1, 1);
    const auto axes = param_ints(eq, "axes");
    if (axes.size() != 1) {
      throw TranslationError(eq.primitive, "'" + eq.primitive + "' expects one axis");
    }
    const std::string dt = dtype_name(eq, param_symbol(eq, "index_dtype"), ctx.framework());
    return one(eq, ctx, ctx.call(fn, ctx.operand(eq.inputs[0]) + ", axis=" +
                                         std::to_string(axes[0])) +
                            ".astype(" + dt + ")");
  };
}

RenderFn cumulative(std::string name) {
  return [name](const Equation& eq, TranslationContext& ctx) {
    check_arity(eq, 1, 1);
    const std::int64_t axis = param_int(eq, "axis");
    const bool reverse = param_bool(eq, "reverse", false);
    const std::string x = ctx.operand(eq.inputs[0]);
    const std::string ax = std::to_string(axis);
    const bool jnp_has = name == "cumsum" || name == "cumprod";
    if (ctx.framework()) {
      if (jnp_has && !reverse) return one(eq, ctx, ctx.call(name, x + ", axis=" + ax));
      return one(eq, ctx, ctx.lax(name, x + ", axis=" + ax +
                                            (reverse ? ", reverse=True" : "")));
    }
    std::string src = reverse ? ctx.call("flip", x + ", " + ax) : x;
    std::string expr;
    if (jnp_has) {
      std::string args = src + ", axis=" + ax;
      const auto out = output_type(eq);
      if (out && is_integer(out->dtype)) args += ", dtype=" + dtype_name(eq, out->dtype, false);
      expr = ctx.call(name, args);
    } else if (name == "cummax" || name == "cummin") {
      ctx.require_star();
      expr = std::string(name == "cummax" ? "maximum" : "minimum") +
             ".accumulate(" + src + ", axis=" + ax + ")";
    } else {
      ctx.require_star();
      expr = "logaddexp.accumulate(" + src + ", axis=" + ax + ")";
    }
    if (reverse) expr = ctx.call("flip", expr + ", " + ax);
    return one(eq, ctx, expr);
  };
}

Statements render_transpose(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  return one(eq, ctx, ctx.call("transpose", ctx.operand(eq.inputs[0]) + ", " +
                                                axes_tuple(param_ints(eq, "permutation"))));
}

Statements render_reshape(const Equation& eq, TranslationContext& ctx) {
  if (eq.inputs.size() != 1) check_arity(eq, 1, 1);
  if (eq.param("dimensions") && !param_is_none(eq, "dimensions")) {
    throw TranslationError(eq.primitive, "reshape with a dimensions permutation is not supported");
  }
  return one(eq, ctx, ctx.call("reshape", array_operand(eq.inputs[0], eq, ctx) + ", " +
                                              axes_tuple(param_ints(eq, "new_sizes"))));
}

Statements render_squeeze(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  return one(eq, ctx, ctx.call("squeeze", ctx.operand(eq.inputs[0]) + ", axis=" +
                                              axes_tuple(param_ints(eq, "dimensions"))));
}

Statements render_expand_dims(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  return one(eq, ctx, ctx.call("expand_dims", array_operand(eq.inputs[0], eq, ctx) + ", " +
                                                  axes_tuple(param_ints(eq, "dimensions"))));
}

Statements render_broadcast_in_dim(const Equation& eq, TranslationContext& ctx) {
  if (eq.inputs.size() != 1) check_arity(eq, 1, 1);
  const auto shape = param_ints(eq, "shape");
  const auto dims = param_ints(eq, "broadcast_dimensions");
  std::vector<std::int64_t> missing;
  for (std::int64_t d = 0; d < static_cast<std::int64_t>(shape.size()); ++d) {
    if (std::find(dims.begin(), dims.end(), d) == dims.end()) missing.push_back(d);
  }
  std::string x = array_operand(eq.inputs[0], eq, ctx);
  if (!missing.empty() && !dims.empty()) {
    x = ctx.call("expand_dims", x + ", " + axes_tuple(missing));
  }
  return one(eq, ctx, ctx.call("broadcast_to", x + ", " + axes_tuple(shape)));
}

Statements render_slice(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  const auto start = param_ints(eq, "start_indices");
  const auto limit = param_ints(eq, "limit_indices");
  const auto strides = param_ints_opt(eq, "strides");
  if (limit.size() != start.size() || (strides && strides->size() != start.size())) {
    throw TranslationError(eq.primitive, "slice bounds have mismatched lengths");
  }
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < start.size(); ++i) {
    std::string p = std::to_string(start[i]) + ":" + std::to_string(limit[i]);
    if (strides && (*strides)[i] != 1) p += ":" + std::to_string((*strides)[i]);
    parts.push_back(p);
  }
  const std::string index = parts.empty() ? "()" : join(parts);
  return one(eq, ctx, ctx.operand(eq.inputs[0]) + "[" + index + "]");
}

Statements render_rev(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 1);
  return one(eq, ctx, ctx.call("flip", ctx.operand(eq.inputs[0]) + ", " +
                                           axes_tuple(param_ints(eq, "dimensions"))));
}

Statements render_concatenate(const Equation& eq, TranslationContext& ctx) {
  if (eq.inputs.empty() || eq.outputs.size() != 1) check_arity(eq, 1, 1);
  std::vector<std::string> ops;
  for (const auto& a : eq.inputs) ops.push_back(array_operand(a, eq, ctx));
  return one(eq, ctx, ctx.call("concatenate", py_tuple(ops) + ", axis=" +
                                                  std::to_string(param_int(eq, "dimension"))));
}

Statements render_split(const Equation& eq, TranslationContext& ctx) {
  const auto sizes = param_ints(eq, "sizes");
  check_arity(eq, 1, sizes.size());
  std::vector<std::int64_t> cuts;
  std::int64_t acc = 0;
  for (std::size_t i = 0; i + 1 < sizes.size(); ++i) cuts.push_back(acc += sizes[i]);
  std::string expr = ctx.call("split", ctx.operand(eq.inputs[0]) + ", " + axes_tuple(cuts) +
                                           ", axis=" + std::to_string(param_int(eq, "axis")));
  // A one-way split still yields a list.
  if (sizes.size() == 1) expr += "[0]";
  return one(eq, ctx, expr);
}

Statements render_pad(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 2, 1);
  const ParamTuple& config = tuple_param(eq, require_param(eq, "padding_config"), "padding_config");
  const std::string x = ctx.operand(eq.inputs[0]);
  const std::string v = ctx.operand(eq.inputs[1]);
  if (ctx.framework()) {
    return one(eq, ctx, ctx.lax("pad", x + ", " + v + ", " +
                                           render_lax_value(eq, require_param(eq, "padding_config"))));
  }
  std::vector<std::string> widths;
  for (const auto& item : config.items) {
    const auto triple = ints_of(eq, item, "padding_config entry");
    if (triple.size() != 3) throw TranslationError(eq.primitive, "padding_config entries need three values");
    if (triple[0] < 0 || triple[1] < 0 || triple[2] != 0) {
      numpy_unsupported(eq, "negative or interior padding has no equivalent");
    }
    widths.push_back(int_tuple({triple[0], triple[1]}));
  }
  return one(eq, ctx, ctx.call("pad", x + ", " + py_tuple(widths) + ", constant_values=" + v));
}

Statements render_iota(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 0, 1);
  const std::string dt = dtype_name(eq, param_symbol(eq, "dtype"), ctx.framework());
  const auto shape = param_ints(eq, "shape");
  const std::int64_t dim = param_int(eq, "dimension");
  if (dim < 0 || dim >= static_cast<std::int64_t>(shape.size())) {
    throw TranslationError(eq.primitive, "iota dimension out of range");
  }
  std::string expr = ctx.call("arange", std::to_string(shape[dim]) + ", dtype=" + dt);
  if (shape.size() > 1) {
    std::vector<std::int64_t> ones(shape.size(), 1);
    ones[dim] = shape[dim];
    expr = ctx.call("broadcast_to", ctx.call("reshape", expr + ", " + int_tuple(ones)) + ", " +
                                        int_tuple(shape));
  }
  return one(eq, ctx, expr);
}

struct DotDims {
  std::vector<std::int64_t> lhs_contract, rhs_contract, lhs_batch, rhs_batch;
};

DotDims dot_dims(const Equation& eq) {
  const ParamTuple& dn = tuple_param(eq, require_param(eq, "dimension_numbers"), "dimension_numbers");
  if (dn.items.size() != 2) throw TranslationError(eq.primitive, "malformed dimension_numbers");
  const ParamTuple& contract = tuple_param(eq, dn.items[0], "contracting dimensions");
  const ParamTuple& batch = tuple_param(eq, dn.items[1], "batch dimensions");
  if (contract.items.size() != 2 || batch.items.size() != 2) {
    throw TranslationError(eq.primitive, "malformed dimension_numbers");
  }
  return {ints_of(eq, contract.items[0], "contracting dimensions"),
          ints_of(eq, contract.items[1], "contracting dimensions"),
          ints_of(eq, batch.items[0], "batch dimensions"),
          ints_of(eq, batch.items[1], "batch dimensions")};
}

Statements render_dot_general(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 2, 1);
  const DotDims d = dot_dims(eq);
  const std::string a = ctx.operand(eq.inputs[0]);
  const std::string b = ctx.operand(eq.inputs[1]);
  if (d.lhs_batch.empty() && d.rhs_batch.empty()) {
    const auto lt = ctx.type_of(eq.inputs[0]);
    const auto rt = ctx.type_of(eq.inputs[1]);
    if (lt && rt && lt->rank() >= 1 && rt->rank() >= 1 && rt->rank() <= 2 &&
        d.lhs_contract == std::vector<std::int64_t>{static_cast<std::int64_t>(lt->rank()) - 1} &&
        d.rhs_contract == std::vector<std::int64_t>{0}) {
      return one(eq, ctx, ctx.call("matmul", a + ", " + b));
    }
    return one(eq, ctx, ctx.call("tensordot", a + ", " + b + ", axes=(" +
                                                  axes_tuple(d.lhs_contract) + ", " +
                                                  axes_tuple(d.rhs_contract) + ")"));
  }
  if (ctx.framework()) {
    return one(eq, ctx, ctx.lax("dot_general", a + ", " + b + ", ((" +
                                                   axes_tuple(d.lhs_contract) + ", " +
                                                   axes_tuple(d.rhs_contract) + "), (" +
                                                   axes_tuple(d.lhs_batch) + ", " +
                                                   axes_tuple(d.rhs_batch) + "))"));
  }
  // Batched contraction as an einsum; output order is batch, lhs free, rhs free.
  const std::size_t lr = rank_of(eq, eq.inputs[0], ctx);
  const std::size_t rr = rank_of(eq, eq.inputs[1], ctx);
  if (lr + rr > 52 || d.lhs_batch.size() != d.rhs_batch.size() ||
      d.lhs_contract.size() != d.rhs_contract.size()) {
    throw TranslationError(eq.primitive, "malformed dimension_numbers");
  }
  std::string ls(lr, ' '), rs(rr, ' '), out;
  char next = 'a';
  auto fresh = [&] { char c = next; next = next == 'z' ? 'A' : static_cast<char>(next + 1); return c; };
  auto at = [&](std::string& s, std::int64_t i) -> char& {
    if (i < 0 || static_cast<std::size_t>(i) >= s.size()) {
      throw TranslationError(eq.primitive, "dimension_numbers axis out of range");
    }
    return s[static_cast<std::size_t>(i)];
  };
  for (std::size_t i = 0; i < d.lhs_batch.size(); ++i) {
    const char c = fresh();
    at(ls, d.lhs_batch[i]) = c;
    at(rs, d.rhs_batch[i]) = c;
    out += c;
  }
  for (std::size_t i = 0; i < d.lhs_contract.size(); ++i) {
    const char c = fresh();
    at(ls, d.lhs_contract[i]) = c;
    at(rs, d.rhs_contract[i]) = c;
  }
  for (char& c : ls) if (c == ' ') out += (c = fresh());
  for (char& c : rs) if (c == ' ') out += (c = fresh());
  return one(eq, ctx, ctx.call("einsum", "\"" + ls + "," + rs + "->" + out + "\", " + a + ", " + b));
}

// Per-axis `lo:hi` bounds of a dynamic window, clamped like the framework.
std::vector<std::string> clamped_window(const Equation& eq, TranslationContext& ctx,
                                        const ShapedType& operand,
                                        const std::vector<std::string>& starts,
                                        const std::vector<std::int64_t>& sizes) {
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < starts.size(); ++i) {
    const std::int64_t hi = operand.dims[i] - sizes[i];
    if (hi < 0) throw TranslationError(eq.primitive, "slice larger than operand");
    const std::string lo = ctx.call("clip", starts[i] + ", 0, " + std::to_string(hi));
    parts.push_back(lo + ":" + lo + " + " + std::to_string(sizes[i]));
  }
  return parts;
}

Statements render_dynamic_slice(const Equation& eq, TranslationContext& ctx) {
  const auto sizes = param_ints(eq, "slice_sizes");
  check_arity(eq, 1 + sizes.size(), 1);
  const auto ops = ctx.operands(eq);
  std::vector<std::string> starts(ops.begin() + 1, ops.end());
  if (ctx.framework()) {
    return one(eq, ctx, ctx.lax("dynamic_slice", ops[0] + ", " + py_tuple(starts) + ", " +
                                                     axes_tuple(sizes)));
  }
  const auto type = ctx.type_of(eq.inputs[0]);
  if (!type || type->rank() != sizes.size()) {
    throw TranslationError(eq.primitive, "'dynamic_slice' needs an annotated operand type");
  }
  return one(eq, ctx, ops[0] + "[" + join(clamped_window(eq, ctx, *type, starts, sizes)) + "]");
}

Statements render_dynamic_update_slice(const Equation& eq, TranslationContext& ctx) {
  if (eq.inputs.size() < 2) check_arity(eq, 2, 1);
  const auto ops = ctx.operands(eq);
  std::vector<std::string> starts(ops.begin() + 2, ops.end());
  if (ctx.framework()) {
    check_arity(eq, eq.inputs.size(), 1);
    return one(eq, ctx, ctx.lax("dynamic_update_slice", ops[0] + ", " + ops[1] + ", " +
                                                            py_tuple(starts)));
  }
  const auto type = ctx.type_of(eq.inputs[0]);
  const auto upd = ctx.type_of(eq.inputs[1]);
  if (!type || !upd || type->rank() != starts.size() || upd->rank() != starts.size()) {
    throw TranslationError(eq.primitive, "'dynamic_update_slice' needs annotated operand types");
  }
  check_arity(eq, eq.inputs.size(), 1);
  const std::string window = join(clamped_window(eq, ctx, *type, starts, upd->dims));
  const std::string out = ctx.bind_outputs(eq).front();
  return {out + " = " + ctx.call("copy", ops[0]), out + "[" + window + "] = " + ops[1]};
}

bool empty_tuple_arg(const ParamCall& call, const std::string& key) {
  const ParamValue* v = call_arg(call, key);
  if (!v) return true;
  auto ints = as_ints(*v);
  return ints && ints->empty();
}

std::string lax_kwargs(const Equation& eq, const std::vector<std::string>& keys) {
  std::string out;
  for (const auto& k : keys) {
    if (const ParamValue* v = eq.param(k)) out += ", " + k + "=" + render_lax_value(eq, *v);
  }
  return out;
}

Statements render_gather(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 2, 1);
  const auto ops = ctx.operands(eq);
  if (ctx.framework()) {
    return one(eq, ctx, ctx.lax("gather", ops[0] + ", " + ops[1] +
                                              lax_kwargs(eq, {"dimension_numbers", "slice_sizes",
                                                              "indices_are_sorted", "unique_indices",
                                                              "mode", "fill_value"})));
  }
  // Supported subset: full slices gathered along one axis, as produced by
  // x[idx] or x[:, idx]. That is a take along that axis.
  const auto* dn = std::get_if<ParamCall>(&require_param(eq, "dimension_numbers").value);
  const auto xt = ctx.type_of(eq.inputs[0]);
  const auto it = ctx.type_of(eq.inputs[1]);
  if (!dn || !xt || !it || xt->rank() == 0 || it->rank() == 0 || it->dims.back() != 1) {
    numpy_unsupported(eq, "this gather form has no equivalent");
  }
  const ParamValue* index_map = call_arg(*dn, "start_index_map");
  const auto mapped = index_map ? as_ints(*index_map) : std::nullopt;
  if (!mapped || mapped->size() != 1 || (*mapped)[0] < 0 ||
      (*mapped)[0] >= static_cast<std::int64_t>(xt->rank())) {
    numpy_unsupported(eq, "this gather form has no equivalent");
  }
  const std::int64_t axis = (*mapped)[0];
  const auto batch = static_cast<std::int64_t>(it->rank()) - 1;
  std::vector<std::int64_t> offsets, sizes;
  for (std::int64_t i = 0; i < static_cast<std::int64_t>(xt->rank()); ++i) {
    sizes.push_back(i == axis ? 1 : xt->dims[static_cast<std::size_t>(i)]);
    if (i != axis) offsets.push_back(i < axis ? i : i - 1 + batch);
  }
  auto arg_is = [&](const char* key, std::vector<std::int64_t> want) {
    const ParamValue* v = call_arg(*dn, key);
    auto got = v ? as_ints(*v) : std::nullopt;
    return got && *got == want;
  };
  const std::string mode = param_symbol(eq, "mode");
  const bool supported =
      arg_is("offset_dims", offsets) && arg_is("collapsed_slice_dims", {axis}) &&
      empty_tuple_arg(*dn, "operand_batching_dims") && param_ints(eq, "slice_sizes") == sizes &&
      (mode.find("CLIP") != std::string::npos || mode.find("PROMISE_IN_BOUNDS") != std::string::npos);
  if (!supported) numpy_unsupported(eq, "this gather form has no equivalent");
  return one(eq, ctx, ctx.call("take", ops[0] + ", " + ops[1] + "[..., 0], axis=" +
                                           std::to_string(axis) + ", mode=\"clip\""));
}

RenderFn scatter(std::string fn) {
  return [fn](const Equation& eq, TranslationContext& ctx) {
    check_arity(eq, 3, 1);
    if (!ctx.framework()) numpy_unsupported(eq, "scatter has no equivalent");
    const auto ops = ctx.operands(eq);
    return one(eq, ctx, ctx.lax(fn, join(ops) +
                                        lax_kwargs(eq, {"dimension_numbers", "indices_are_sorted",
                                                        "unique_indices", "mode"})));
  };
}

Statements render_sort(const Equation& eq, TranslationContext& ctx) {
  if (eq.inputs.empty() || eq.inputs.size() != eq.outputs.size()) {
    check_arity(eq, std::max<std::size_t>(eq.outputs.size(), 1), eq.outputs.size());
  }
  const std::int64_t dim = param_int(eq, "dimension");
  const std::int64_t keys = param_int_opt(eq, "num_keys").value_or(1);
  const bool stable = param_bool(eq, "is_stable", false);
  const auto ops = ctx.operands(eq);
  const std::string ax = std::to_string(dim);
  if (ops.size() == 1) return one(eq, ctx, ctx.call("sort", ops[0] + ", axis=" + ax));
  if (ctx.framework()) {
    return one(eq, ctx, ctx.lax("sort", py_tuple(ops) + ", dimension=" + ax +
                                            ", is_stable=" + (stable ? "True" : "False") +
                                            ", num_keys=" + std::to_string(keys)));
  }
  if (keys != 1) numpy_unsupported(eq, "multi-key sort has no equivalent");
  const std::string order = ctx.call("argsort", ops[0] + ", axis=" + ax + ", kind=\"stable\"");
  std::vector<std::string> cols;
  for (const auto& o : ops) cols.push_back(ctx.call("take_along_axis", o + ", " + order + ", " + ax));
  return one(eq, ctx, join(cols));
}

Statements render_top_k(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 1, 2);
  if (!ctx.framework()) numpy_unsupported(eq, "'top_k' has no equivalent");
  return one(eq, ctx, ctx.lax("top_k", ctx.operand(eq.inputs[0]) + ", " +
                                           std::to_string(param_int(eq, "k"))));
}

Statements render_conv(const Equation& eq, TranslationContext& ctx) {
  check_arity(eq, 2, 1);
  if (!ctx.framework()) numpy_unsupported(eq, "convolution has no equivalent");
  const auto ops = ctx.operands(eq);
  return one(eq, ctx, ctx.lax("conv_general_dilated",
                              ops[0] + ", " + ops[1] +
                                  lax_kwargs(eq, {"window_strides", "padding", "lhs_dilation",
                                                  "rhs_dilation", "dimension_numbers",
                                                  "feature_group_count", "batch_group_count",
                                                  "precision", "preferred_element_type"})));
}

}  // namespace

void add_tensor(OperatorRegistry& r) {
  r.add({"reduce_sum", reduction("sum", true)});
  r.add({"reduce_prod", reduction("prod", true)});
  r.add({"reduce_max", reduction("max", false)});
  r.add({"reduce_min", reduction("min", false)});
  r.add({"reduce_and", reduction("all", false)});
  r.add({"reduce_or", reduction("any", false)});
  r.add({"argmax", arg_reduction("argmax")});
  r.add({"argmin", arg_reduction("argmin")});
  for (const char* name : {"cumsum", "cumprod", "cummax", "cummin", "cumlogsumexp"}) {
    r.add({name, cumulative(name)});
  }
  r.add({"transpose", render_transpose});
  r.add({"reshape", render_reshape});
  r.add({"squeeze", render_squeeze});
  r.add({"expand_dims", render_expand_dims});
  r.add({"broadcast_in_dim", render_broadcast_in_dim});
  r.add({"slice", render_slice});
  r.add({"rev", render_rev});
  r.add({"concatenate", render_concatenate});
  r.add({"split", render_split});
  r.add({"pad", render_pad});
  r.add({"iota", render_iota});
  r.add({"dot_general", render_dot_general});
  r.add({"dynamic_slice", render_dynamic_slice});
  r.add({"dynamic_update_slice", render_dynamic_update_slice});
  r.add({"gather", render_gather});
  const std::pair<const char*, const char*> scatters[] = {
      {"scatter", "scatter"},         {"scatter-add", "scatter_add"},
      {"scatter_add", "scatter_add"}, {"scatter-mul", "scatter_mul"},
      {"scatter_mul", "scatter_mul"}, {"scatter-min", "scatter_min"},
      {"scatter_min", "scatter_min"}, {"scatter-max", "scatter_max"},
      {"scatter_max", "scatter_max"},
  };
  for (const auto& [prim, fn] : scatters) r.add({prim, scatter(fn)});
  r.add({"sort", render_sort});
  r.add({"top_k", render_top_k});
  r.add({"conv_general_dilated", render_conv});
}

}  // namespace jaxpr2py::rules
