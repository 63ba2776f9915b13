#include "mrdi/format/serializer.hpp"

#include <limits>
#include <map>

#include "mrdi/error.hpp"

namespace mrdi::format {

using algebra::BigInt;
using algebra::Context;
using algebra::ExactMatrix;
using algebra::Monomial;
using algebra::MonomialMap;
using algebra::RingElem;
using algebra::RingKind;
using algebra::Term;

namespace {

std::string_view ring_tag(Context ctx) {
  switch (ctx.kind()) {
    case RingKind::Integers: return kZZRing;
    case RingKind::Rationals: return kQQField;
    case RingKind::PrimeField: return kFpField;
    case RingKind::Univariate: return kPolyRing;
    case RingKind::Multivariate: return kMPolyRing;
  }
  return "";
}

std::string_view element_tag(Context ctx) {
  switch (ctx.kind()) {
    case RingKind::Integers: return kZZRingElem;
    case RingKind::Rationals: return kQQFieldElem;
    case RingKind::PrimeField: return kFpFieldElem;
    case RingKind::Univariate: return kPolyRingElem;
    case RingKind::Multivariate: return kMPolyRingElem;
  }
  return "";
}

RingKind kind_of_ring_tag(std::string_view tag) {
  if (tag == kFpField || tag == kFpFieldElem) return RingKind::PrimeField;
  if (tag == kPolyRing || tag == kPolyRingElem) return RingKind::Univariate;
  return RingKind::Multivariate;
}

std::string child(const std::string& path, std::string_view key) {
  return path + "/" + std::string(key);
}

std::string child(const std::string& path, std::size_t index) {
  return path + "/" + std::to_string(index);
}

// ---------------------------------------------------------------- encoding

DataNode encode_multivariate(const RingElem& p, SerializerMode mode) {
  DataNode::List terms;
  terms.reserve(p.terms().size());
  for (const auto& t : p.terms()) {
    DataNode::List exps;
    exps.reserve(t.monomial.arity());
    for (auto e : t.monomial.exponents()) exps.emplace_back(std::to_string(e));
    terms.emplace_back(DataNode::List{DataNode(std::move(exps)), encode_element(t.coefficient, mode)});
  }
  return DataNode(std::move(terms));
}

// ---------------------------------------------------------------- decoding

const std::string& expect_text(const DataNode& node, const std::string& path) {
  if (!node.is_text()) throw DecodeError(path, "expected a text scalar");
  return node.text();
}

const DataNode::List& expect_list(const DataNode& node, const std::string& path) {
  if (!node.is_list()) throw DecodeError(path, "expected a list");
  return node.list();
}

const DataNode& expect_key(const DataNode& node, std::string_view key, const std::string& path) {
  if (!node.is_map()) throw DecodeError(path, "expected a map");
  const DataNode* v = node.find(key);
  if (!v) throw DecodeError(path, "missing key \"" + std::string(key) + "\"");
  return *v;
}

BigInt decode_integer(const DataNode& node, const std::string& path) {
  try {
    return algebra::parse_integer(expect_text(node, path));
  } catch (const ValidationError& e) {
    throw DecodeError(path, e.what());
  }
}

std::uint64_t decode_count(const DataNode& node, const std::string& path,
                           std::uint64_t limit = std::numeric_limits<std::uint32_t>::max()) {
  BigInt n = decode_integer(node, path);
  if (sgn(n) < 0 || n > limit) throw DecodeError(path, "count out of range");
  return n.get_ui();
}

RingElem decode_multivariate(Context ring, const DataNode& node, SerializerMode mode,
                             const std::string& path) {
  const auto& list = expect_list(node, path);
  std::vector<Term> terms;
  terms.reserve(list.size());
  std::set<Monomial> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string tp = child(path, i);
    const auto& pair = expect_list(list[i], tp);
    if (pair.size() != 2) throw DecodeError(tp, "expected [exponents, coefficient]");
    const auto& exps = expect_list(pair[0], child(tp, 0));
    if (exps.size() != ring.arity()) {
      throw DecodeError(child(tp, 0), "expected " + std::to_string(ring.arity()) + " exponents");
    }
    std::vector<std::uint32_t> e(exps.size());
    for (std::size_t j = 0; j < exps.size(); ++j) {
      e[j] = static_cast<std::uint32_t>(decode_count(exps[j], child(child(tp, 0), j)));
    }
    Monomial m(std::move(e));
    if (!seen.insert(m).second) throw DecodeError(tp, "repeated monomial");
    terms.push_back(Term{std::move(m), decode_element(ring.base(), pair[1], mode, child(tp, 1))});
  }
  return RingElem::polynomial(ring, std::move(terms));
}

// ---------------------------------------------------------------- _type trees

TypeNode::Param ring_param(Context ctx, SerializerState& state) {
  if (ctx.is_reference()) return state.reference(ctx);
  return Box<TypeNode>(TypeNode::simple(std::string(ring_tag(ctx))));
}

TypeNode type_of(const Value& value, SerializerState& state);

TypeNode element_type(Context ring, SerializerState& state) {
  if (!ring.is_reference()) return TypeNode::simple(std::string(element_tag(ring)));
  return TypeNode::with_uuid(std::string(element_tag(ring)), state.reference(ring));
}

TypeNode param_to_node(TypeNode::Param p) {
  TypeNode node;
  std::visit([&](auto& x) { node.params = std::move(x); }, p);
  return node;
}

TypeNode type_of(const Value& value, SerializerState& state) {
  return std::visit(
      [&](const auto& x) -> TypeNode {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RingElem>) {
          return element_type(x.parent(), state);
        } else if constexpr (std::is_same_v<T, Context>) {
          if (!x.is_reference()) return TypeNode::simple(std::string(ring_tag(x)));
          return TypeNode::with_uuid(std::string(ring_tag(x)), state.reference(x));
        } else if constexpr (std::is_same_v<T, ExactMatrix>) {
          TypeNode node = param_to_node(ring_param(x.ring(), state));
          node.name = kMatrix;
          return node;
        } else if constexpr (std::is_same_v<T, MonomialMap>) {
          TypeNode::ParamMap params;
          params.emplace_back("domain", state.reference(x.source()));
          params.emplace_back("codomain", state.reference(x.target()));
          return TypeNode::with_map(std::string(kMonomialMap), std::move(params));
        } else if constexpr (std::is_same_v<T, ValueVector>) {
          if (x.items.empty()) return TypeNode::simple(std::string(kVector));
          TypeNode first = type_of(x.items[0], state);
          for (std::size_t i = 1; i < x.items.size(); ++i) {
            if (!(type_of(x.items[i], state) == first)) {
              throw UnsupportedType("Vector with items of different types (use a Tuple)");
            }
          }
          return TypeNode::with_node(std::string(kVector), std::move(first));
        } else {
          if (x.items.empty()) return TypeNode::simple(std::string(kTuple));
          TypeNode::ParamMap params;
          for (std::size_t i = 0; i < x.items.size(); ++i) {
            params.emplace_back(std::to_string(i), Box<TypeNode>(type_of(x.items[i], state)));
          }
          return TypeNode::with_map(std::string(kTuple), std::move(params));
        }
      },
      value.v);
}

DataNode data_of(const Value& value, SerializerMode mode) {
  return std::visit(
      [&](const auto& x) -> DataNode {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, RingElem>) {
          return encode_element(x, mode);
        } else if constexpr (std::is_same_v<T, Context>) {
          return DataNode(DataNode::Map{});
        } else if constexpr (std::is_same_v<T, ExactMatrix>) {
          DataNode::List rows;
          rows.reserve(x.rows());
          for (std::size_t r = 0; r < x.rows(); ++r) {
            DataNode::List row;
            row.reserve(x.cols());
            for (std::size_t c = 0; c < x.cols(); ++c) row.push_back(encode_element(x(r, c), mode));
            rows.emplace_back(std::move(row));
          }
          return DataNode(DataNode::Map{{"nrows", std::to_string(x.rows())},
                                        {"ncols", std::to_string(x.cols())},
                                        {"entries", DataNode(std::move(rows))}});
        } else if constexpr (std::is_same_v<T, MonomialMap>) {
          DataNode::List images;
          for (const auto& img : x.images()) images.push_back(encode_element(img, mode));
          return DataNode(std::move(images));
        } else {
          DataNode::List items;
          items.reserve(x.items.size());
          for (const auto& item : x.items) items.push_back(data_of(item, mode));
          return DataNode(std::move(items));
        }
      },
      value.v);
}

// ---------------------------------------------------------------- loading

Context resolve_ring_param(const TypeNode::Param& p, DeserializerState& state,
                           const std::string& path) {
  if (auto* id = std::get_if<Uuid>(&p)) return state.resolve(*id);
  const TypeNode& node = *std::get<Box<TypeNode>>(p);
  if (node.name == kZZRing) return algebra::integers();
  if (node.name == kQQField) return algebra::rationals();
  throw DecodeError(path, "expected a ring parameter, got type \"" + node.name + "\"");
}

Context resolve_uuid_param(const TypeNode& t, DeserializerState& state, const std::string& path) {
  if (auto* id = std::get_if<Uuid>(&t.params)) return state.resolve(*id);
  throw DecodeError(path, "type \"" + t.name + "\" needs a context UUID parameter");
}

void require_kind(Context ctx, RingKind kind, const TypeNode& t, const std::string& path) {
  if (ctx.kind() != kind) {
    throw DecodeError(path, "type \"" + t.name + "\" refers to " + ctx.to_string());
  }
}

const TypeNode::Param* find_param(const TypeNode& t, std::string_view key) {
  if (auto* map = std::get_if<TypeNode::ParamMap>(&t.params)) {
    for (const auto& [k, v] : *map) {
      if (k == key) return &v;
    }
  }
  return nullptr;
}

Value load_value(const TypeNode& t, const DataNode& data, DeserializerState& state,
                 const std::string& tpath, const std::string& dpath) {
  const SerializerMode mode = state.mode();
  const std::string ppath = child(tpath, "params");
  if (t.name == kZZRingElem) return decode_element(algebra::integers(), data, mode, dpath);
  if (t.name == kQQFieldElem) return decode_element(algebra::rationals(), data, mode, dpath);
  if (t.name == kFpFieldElem || t.name == kPolyRingElem || t.name == kMPolyRingElem) {
    Context ring = resolve_uuid_param(t, state, ppath);
    require_kind(ring, kind_of_ring_tag(t.name), t, ppath);
    return decode_element(ring, data, mode, dpath);
  }
  if (t.name == kZZRing) return algebra::integers();
  if (t.name == kQQField) return algebra::rationals();
  if (is_reference_ring_type(t.name)) {
    Context ring = resolve_uuid_param(t, state, ppath);
    require_kind(ring, kind_of_ring_tag(t.name), t, ppath);
    return ring;
  }
  if (t.name == kMatrix) {
    Context ring;
    if (auto* id = std::get_if<Uuid>(&t.params)) {
      ring = state.resolve(*id);
    } else if (auto* node = std::get_if<Box<TypeNode>>(&t.params)) {
      ring = resolve_ring_param(*node, state, ppath);
    } else {
      throw DecodeError(ppath, "Matrix needs a ring parameter");
    }
    const std::size_t nrows = decode_count(expect_key(data, "nrows", dpath), child(dpath, "nrows"));
    const std::size_t ncols = decode_count(expect_key(data, "ncols", dpath), child(dpath, "ncols"));
    const std::string epath = child(dpath, "entries");
    const auto& rows = expect_list(expect_key(data, "entries", dpath), epath);
    if (rows.size() != nrows) throw DecodeError(epath, "expected " + std::to_string(nrows) + " rows");
    std::vector<RingElem> entries;
    entries.reserve(nrows * ncols);
    for (std::size_t r = 0; r < nrows; ++r) {
      const auto& row = expect_list(rows[r], child(epath, r));
      if (row.size() != ncols) {
        throw DecodeError(child(epath, r), "expected " + std::to_string(ncols) + " entries");
      }
      for (std::size_t c = 0; c < ncols; ++c) {
        entries.push_back(decode_element(ring, row[c], mode, child(child(epath, r), c)));
      }
    }
    return ExactMatrix(ring, nrows, ncols, std::move(entries));
  }
  if (t.name == kMonomialMap) {
    const auto* dom = find_param(t, "domain");
    const auto* cod = find_param(t, "codomain");
    if (!dom || !cod) throw DecodeError(ppath, "MonomialMap needs domain and codomain");
    Context source = resolve_ring_param(*dom, state, child(ppath, "domain"));
    Context target = resolve_ring_param(*cod, state, child(ppath, "codomain"));
    if (target.kind() != RingKind::Multivariate) {
      throw DecodeError(child(ppath, "codomain"), "codomain must be a multivariate ring");
    }
    const auto& list = expect_list(data, dpath);
    std::vector<RingElem> images;
    images.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      images.push_back(decode_element(target, list[i], mode, child(dpath, i)));
    }
    try {
      return MonomialMap(source, target, std::move(images));
    } catch (const ValidationError& e) {
      throw DecodeError(dpath, e.what());
    }
  }
  if (t.name == kVector) {
    const auto& list = expect_list(data, dpath);
    ValueVector out;
    if (std::holds_alternative<std::monostate>(t.params)) {
      if (!list.empty()) throw DecodeError(ppath, "nonempty Vector without an item type");
      return out;
    }
    const auto* inner = std::get_if<Box<TypeNode>>(&t.params);
    if (!inner) throw DecodeError(ppath, "Vector needs an item type");
    out.items.reserve(list.size());
    for (std::size_t i = 0; i < list.size(); ++i) {
      out.items.push_back(load_value(**inner, list[i], state, ppath, child(dpath, i)));
    }
    return out;
  }
  if (t.name == kTuple) {
    const auto& list = expect_list(data, dpath);
    ValueTuple out;
    if (std::holds_alternative<std::monostate>(t.params)) {
      if (!list.empty()) throw DecodeError(ppath, "nonempty Tuple without item types");
      return out;
    }
    const auto* params = std::get_if<TypeNode::ParamMap>(&t.params);
    if (!params || params->size() != list.size()) {
      throw DecodeError(ppath, "Tuple needs one item type per item");
    }
    for (std::size_t i = 0; i < list.size(); ++i) {
      const auto& [key, param] = (*params)[i];
      const auto* inner = std::get_if<Box<TypeNode>>(&param);
      if (key != std::to_string(i) || !inner) {
        throw DecodeError(child(ppath, key), "Tuple item types must be keyed 0..n-1");
      }
      out.items.push_back(load_value(**inner, list[i], state, child(ppath, key), child(dpath, i)));
    }
    return out;
  }
  throw UnsupportedType(t.name);
}

int major_version(const std::string& version) {
  try {
    return std::stoi(version.substr(0, version.find('.')));
  } catch (const std::exception&) {
    return -1;
  }
}

}  // namespace

// ---------------------------------------------------------------- public

Uuid SerializerState::reference(Context ctx) {
  if (mode_ == SerializerMode::IPC) {
    if (auto id = global_->uuid_of(ctx)) return *id;
    throw ContextNotPreloaded(ctx.to_string());
  }
  Uuid id = global_->register_context(ctx);
  if (!pending_.count(id)) {
    if (ctx.is_polynomial_ring() && ctx.base().is_reference()) reference(ctx.base());
    pending_.emplace(id, context_ref_document(ctx, *global_));
  }
  return id;
}

MrdiDocument save(const Value& value, SerializerState& state) {
  MrdiDocument doc;
  doc.type = type_of(value, state);
  doc.data = data_of(value, state.mode());
  if (state.mode() == SerializerMode::LongTerm) {
    doc.ns = current_namespace();
    doc.refs = state.pending_refs();
  }
  return doc;
}

MrdiDocument save(const Value& value, SerializerMode mode, GlobalSerializerState& global) {
  SerializerState state(mode, global);
  return save(value, state);
}

DeserializerState::DeserializerState(const MrdiDocument& doc, GlobalSerializerState& global)
    : doc_(&doc), global_(&global) {
  if (doc.ns) {
    const NamespaceRecord ours = current_namespace();
    if (doc.ns->system != ours.system) {
      warnings_.push_back("document written by \"" + doc.ns->system + "\"");
    }
    if (major_version(doc.ns->version) != major_version(ours.version)) {
      warnings_.push_back("document version " + doc.ns->version + " differs in major version from " +
                          ours.version);
    }
  }
}

Context DeserializerState::resolve(const Uuid& id) {
  if (auto ctx = global_->lookup(id)) return *ctx;
  if (mode() == SerializerMode::IPC) throw ContextNotPreloaded(id.str());
  const auto it = doc_->refs->find(id);
  if (it == doc_->refs->end()) throw DanglingReference(id.str());
  if (!in_progress_.insert(id).second) throw SchemaError("cyclic reference through " + id.str());
  Context ctx = context_from_ref(it->second, [this](const Uuid& dep) { return resolve(dep); },
                                 "/_refs/" + id.str());
  in_progress_.erase(id);
  global_->bind(id, ctx);
  return ctx;
}

Value load(DeserializerState& state) {
  const MrdiDocument& doc = state.document();
  return load_value(doc.type, doc.data, state, "/_type", "/data");
}

Value load(const MrdiDocument& doc, GlobalSerializerState& global) {
  DeserializerState state(doc, global);
  return load(state);
}

RefDocument context_ref_document(Context ctx, GlobalSerializerState& global) {
  switch (ctx.kind()) {
    case RingKind::PrimeField:
      return RefDocument{TypeNode::simple(std::string(kFpField)), DataNode(std::to_string(ctx.modulus()))};
    case RingKind::Univariate:
    case RingKind::Multivariate: {
      Context base = ctx.base();
      TypeNode::Param base_param =
          base.is_reference() ? TypeNode::Param(global.register_context(base))
                              : TypeNode::Param(Box<TypeNode>(TypeNode::simple(std::string(ring_tag(base)))));
      TypeNode::ParamMap params;
      params.emplace_back("base_ring", std::move(base_param));
      DataNode::List symbols;
      for (const auto& s : ctx.symbols()) symbols.emplace_back(s);
      return RefDocument{TypeNode::with_map(std::string(ring_tag(ctx)), std::move(params)),
                         DataNode(DataNode::Map{{"symbols", DataNode(std::move(symbols))}})};
    }
    default:
      throw UnsupportedType(ctx.to_string() + " is written inline, not as a reference");
  }
}

Context context_from_ref(const RefDocument& ref,
                         const std::function<Context(const Uuid&)>& resolve,
                         const std::string& path) {
  const std::string tpath = path + "/_type";
  const std::string dpath = path + "/data";
  try {
    if (ref.type.name == kFpField) {
      const BigInt p = decode_integer(ref.data, dpath);
      if (sgn(p) <= 0 || !p.fits_ulong_p()) throw DecodeError(dpath, "bad modulus");
      return algebra::prime_field(p.get_ui());
    }
    if (ref.type.name == kPolyRing || ref.type.name == kMPolyRing) {
      const auto* base_param = find_param(ref.type, "base_ring");
      if (!base_param) throw DecodeError(tpath + "/params", "missing base_ring");
      Context base;
      if (auto* id = std::get_if<Uuid>(base_param)) {
        base = resolve(*id);
      } else {
        const TypeNode& node = **std::get_if<Box<TypeNode>>(base_param);
        if (node.name == kZZRing) base = algebra::integers();
        else if (node.name == kQQField) base = algebra::rationals();
        else throw DecodeError(tpath + "/params/base_ring", "unknown base ring \"" + node.name + "\"");
      }
      const std::string spath = dpath + "/symbols";
      const auto& list = expect_list(expect_key(ref.data, "symbols", dpath), spath);
      std::vector<std::string> symbols;
      for (std::size_t i = 0; i < list.size(); ++i) symbols.push_back(expect_text(list[i], child(spath, i)));
      if (ref.type.name == kPolyRing) {
        if (symbols.size() != 1) throw DecodeError(spath, "PolyRing takes exactly one symbol");
        return algebra::polynomial_ring(base, symbols[0]);
      }
      return algebra::multivariate_ring(base, std::move(symbols));
    }
  } catch (const ValidationError& e) {
    throw DecodeError(path, e.what());
  }
  if (!is_known_type(ref.type.name)) throw UnsupportedType(ref.type.name);
  throw DecodeError(tpath, "\"" + ref.type.name + "\" is not a context type");
}

void merge_refs(const RefTable& refs, GlobalSerializerState& global) {
  std::set<Uuid> in_progress;
  std::function<Context(const Uuid&)> resolve = [&](const Uuid& id) -> Context {
    if (auto ctx = global.lookup(id)) return *ctx;
    auto it = refs.find(id);
    if (it == refs.end()) throw DanglingReference(id.str());
    if (!in_progress.insert(id).second) throw SchemaError("cyclic reference through " + id.str());
    Context ctx = context_from_ref(it->second, resolve, "/_refs/" + id.str());
    in_progress.erase(id);
    global.bind(id, ctx);
    return ctx;
  };
  for (const auto& [id, ref] : refs) resolve(id);
}

DataNode encode_univariate(const RingElem& p, SerializerMode mode) {
  const auto terms = p.terms();
  DataNode::List out;
  if (mode == SerializerMode::LongTerm) {
    out.reserve(terms.size());
    for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
      out.emplace_back(DataNode::List{DataNode(std::to_string(it->monomial[0])),
                                      encode_element(it->coefficient, mode)});
    }
    return DataNode(std::move(out));
  }
  if (terms.empty()) return DataNode(std::move(out));
  const Context base = p.parent().base();
  const DataNode zero = encode_element(RingElem::zero(base), mode);
  out.assign(static_cast<std::size_t>(p.degree()) + 1, zero);
  for (const auto& t : terms) out[t.monomial[0]] = encode_element(t.coefficient, mode);
  return DataNode(std::move(out));
}

RingElem decode_univariate(Context ring, const DataNode& node, SerializerMode mode,
                           const std::string& path) {
  const auto& list = expect_list(node, path);
  std::vector<Term> terms;
  terms.reserve(list.size());
  if (mode == SerializerMode::LongTerm) {
    std::set<std::uint64_t> seen;
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string tp = child(path, i);
      const auto& pair = expect_list(list[i], tp);
      if (pair.size() != 2) throw DecodeError(tp, "expected [degree, coefficient]");
      const std::uint64_t d = decode_count(pair[0], child(tp, 0));
      if (!seen.insert(d).second) throw DecodeError(tp, "repeated degree " + std::to_string(d));
      terms.push_back(Term{Monomial({static_cast<std::uint32_t>(d)}),
                           decode_element(ring.base(), pair[1], mode, child(tp, 1))});
    }
  } else {
    for (std::size_t i = 0; i < list.size(); ++i) {
      RingElem c = decode_element(ring.base(), list[i], mode, child(path, i));
      if (!c.is_zero()) terms.push_back(Term{Monomial({static_cast<std::uint32_t>(i)}), std::move(c)});
    }
  }
  return RingElem::polynomial(ring, std::move(terms));
}

DataNode encode_element(const RingElem& e, SerializerMode mode) {
  switch (e.parent().kind()) {
    case RingKind::Integers: return DataNode(algebra::to_text(e.as_integer()));
    case RingKind::Rationals: return DataNode(algebra::to_text(e.as_rational()));
    case RingKind::PrimeField: return DataNode(std::to_string(e.residue()));
    case RingKind::Univariate: return encode_univariate(e, mode);
    case RingKind::Multivariate: return encode_multivariate(e, mode);
  }
  throw UnsupportedType(e.parent().to_string());
}

RingElem decode_element(Context ring, const DataNode& node, SerializerMode mode,
                        const std::string& path) {
  switch (ring.kind()) {
    case RingKind::Integers: return RingElem::integer(decode_integer(node, path));
    case RingKind::Rationals:
      try {
        return RingElem::rational(algebra::parse_rational(expect_text(node, path)));
      } catch (const ValidationError& e) {
        throw DecodeError(path, e.what());
      }
    case RingKind::PrimeField: {
      const BigInt r = decode_integer(node, path);
      if (sgn(r) < 0 || r >= ring.modulus()) {
        throw DecodeError(path, "residue out of range for " + ring.to_string());
      }
      return RingElem::residue(ring, r.get_ui());
    }
    case RingKind::Univariate: return decode_univariate(ring, node, mode, path);
    case RingKind::Multivariate: return decode_multivariate(ring, node, mode, path);
  }
  throw UnsupportedType(ring.to_string());
}

}  // namespace mrdi::format
