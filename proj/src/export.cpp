#include "uqd/suite.hpp"

namespace uqd {

namespace {

constexpr std::uint64_t kMaxEntries = 100000;

Json element_json(const Element& x, int rank, int letters) {
  Json out = Json::array();
  for (const auto& [m, c] : x.sorted()) out.push_back(Json{{"monomial", monomial_json(m, rank, letters)}, {"coeff", scalar_json(c)}});
  return out;
}

Json tensor_json(const TensorElement& x, int rank, int letters) {
  Json out = Json::array();
  for (const auto& [k, c] : x.sorted()) {
    Json t = Json::array();
    for (int s = 0; s < x.arity(); ++s) t.push_back(monomial_json(k[s], rank, letters));
    out.push_back(Json{{"tensor", t}, {"coeff", scalar_json(c)}});
  }
  return out;
}

// Diagonal tensors: each label becomes a monomial whose group_exp holds the label digits.
Json phase_json(const PhaseTensor& t, int letters) {
  Json out = Json::array();
  const LabelGroup& g = t.group();
  t.for_each_index([&](const PhaseTensor::Index& idx) {
    Json tensor = Json::array();
    for (int s = 0; s < t.arity(); ++s) {
      Monomial m;
      for (int i = 0; i < g.dims(); ++i) m.group[i] = static_cast<std::uint16_t>(g.digit(idx[s], i));
      tensor.push_back(monomial_json(m, g.dims(), letters));
    }
    out.push_back(Json{{"tensor", tensor}, {"coeff", scalar_json(t.coefficient(idx))}});
  });
  return out;
}

void refuse_if_large(std::uint64_t entries, const std::string& what) {
  if (entries > kMaxEntries) {
    throw ExportRefused(what + " export would have " + std::to_string(entries) + " entries (limit " +
                        std::to_string(kMaxEntries) + ")");
  }
}

}  // namespace

const std::vector<std::string>& export_targets() {
  static const std::vector<std::string> t = {"uqb", "Aq", "J", "Phi", "double-generators"};
  return t;
}

Json export_document(CartanType type, int n, const std::string& what) {
  auto u = QuantumBorel::build(type, n);
  const int rank = u->rank();
  const int letters = u->pbw().letter_count();
  Json params{{"type", std::string(to_string(type))}, {"n", n}, {"what", what}, {"q_order", u->m()}};
  Json entries = Json::array();

  if (what == "uqb") {
    const Algebra& a = u->group_algebra();
    const std::uint64_t dim = a.dimension();
    refuse_if_large(dim * dim, "uqb structure-constant");
    params["cartan_basis"] = "group";
    params["dimension"] = dim;
    const auto basis = a.basis_monomials();
    for (std::uint64_t i = 0; i < dim; ++i) {
      Json products = Json::array();
      for (std::uint64_t k = 0; k < dim; ++k) products.push_back(element_json(a.multiply(basis[i], basis[k]), rank, letters));
      entries.push_back(Json{{"index", i},
                             {"monomial", monomial_json(basis[i], rank, letters)},
                             {"coproduct", tensor_json(u->hopf().coproduct(basis[i]), rank, letters)},
                             {"products", products}});
    }
  } else if (what == "Aq") {
    const AqBasis aq = build_Aq(u);
    refuse_if_large(aq.count, "Aq basis");
    params["cartan_basis"] = "group";
    params["dimension"] = aq.count;
    for (std::uint64_t i = 0; i < aq.count; ++i) entries.push_back(Json{{"monomial", monomial_json(aq.monomial(i), rank, letters)}});
  } else if (what == "J") {
    const TwistJ j = build_twist_J(*u);
    refuse_if_large(j.value.entry_count(), "J");
    params["cartan_basis"] = "idempotent";
    params["label_modulus"] = j.value.group().modulus();
    entries = phase_json(j.value, 0);
  } else if (what == "Phi") {
    const Associator phi = closed_form_phi(type, n);
    refuse_if_large(phi.value.entry_count(), "Phi");
    params["cartan_basis"] = "idempotent";
    params["label_modulus"] = phi.value.group().modulus();
    entries = phase_json(phi.value, 0);
  } else if (what == "double-generators") {
    if (!(type == CartanType::A1 && n == 3)) throw ExportRefused("the double is built only at (A1, n=3)");
    auto d = DrinfeldDouble::build(u);
    const DoubleGenerators g = identify_generators(*d);
    params["cartan_basis"] = "group";
    params["layout"] = "tensor[0] is the dual basis functional delta_p, tensor[1] the u_q(b) basis monomial";
    const std::vector<std::pair<std::string, const TensorElement*>> named = {
        {"e", &g.e[0]}, {"f", &g.f[0]}, {"K", &g.K[0]}, {"K'", &g.Kp[0]}};
    for (const auto& [name, x] : named) entries.push_back(Json{{"name", name}, {"terms", tensor_json(*x, rank, letters)}});
  } else {
    throw ExportRefused("unknown export target: " + what);
  }
  return Json{{"schema_version", kSchemaVersion}, {"parameters", params}, {"entries", entries}};
}

}  // namespace uqd
