#include "tiercode/codes.hpp"

#include <limits>
#include <set>

#include "tiercode/linalg.hpp"
#include "tiercode/linpoly.hpp"

namespace tiercode {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require(bool cond, const std::string& what) {
  if (!cond) throw SpecError(what);
}

void check_field(const FieldPtr& field, unsigned q, unsigned degree, const char* code) {
  require(field != nullptr, std::string(code) + ": missing field");
  require(field->characteristic() == q,
          std::string(code) + ": q must equal the field characteristic (prime base fields only)");
  require(field->degree() == degree, std::string(code) + ": field degree does not match code parameters");
}

void check_independent(const std::vector<FieldElement>& elems, const FieldContext& field, const char* what) {
  BaseMatrix rows;
  for (const auto& e : elems) {
    field.check_same(e);
    rows.push_back(e.coeffs());
  }
  require(linalg::rank(rows, field.degree(), field.characteristic()) == elems.size(),
          std::string(what) + " are not linearly independent over GF(q)");
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

LinearizedPoly message_poly(std::span<const FieldElement> u, unsigned q) {
  return LinearizedPoly(std::vector<FieldElement>(u.begin(), u.end()), q);
}

void check_message(std::span<const FieldElement> u, unsigned k, const FieldContext& field) {
  require(u.size() == k, "message has length " + std::to_string(u.size()) + ", expected " + std::to_string(k));
  for (const auto& x : u) field.check_same(x);
}

// Entries of every MV basis row for message u (row 0 carries iterates, rows
// i >= 1 carry iterates divided by alpha_i).
std::vector<std::vector<FieldElement>> mv_rows(const MVSpec& spec, std::span<const FieldElement> u) {
  const auto poly = message_poly(u, spec.q);
  std::vector<std::vector<FieldElement>> rows;
  for (unsigned i = 0; i < spec.l; ++i) {
    const auto& a = spec.alphas[i];
    std::vector<FieldElement> row{a};
    FieldElement it = a;
    const FieldElement a_inv = spec.field->inv(a);
    for (unsigned j = 1; j <= spec.L; ++j) {
      it = poly.evaluate(it);
      row.push_back(i == 0 ? it : it * a_inv);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

CodeKind kind_of(const CodeSpec& spec) {
  return std::visit(overloaded{[](const GabidulinSpec&) { return CodeKind::gabidulin; },
                               [](const KKSpec&) { return CodeKind::kk; },
                               [](const MVSpec&) { return CodeKind::mv; }},
                    spec);
}

const char* to_string(CodeKind kind) {
  switch (kind) {
    case CodeKind::gabidulin: return "gabidulin";
    case CodeKind::kk: return "kk";
    case CodeKind::mv: return "mv";
  }
  return "?";
}

const char* to_string(MvLayout layout) {
  return layout == MvLayout::compressed ? "compressed" : "uncompressed";
}

const FieldContext& field_of(const CodeSpec& spec) {
  return *std::visit([](const auto& s) -> const FieldPtr& { return s.field; }, spec);
}

void validate(const GabidulinSpec& s) {
  check_field(s.field, s.q, s.m, "gabidulin");
  require(s.n >= 1 && s.n <= s.m, "gabidulin: need 1 <= n <= m");
  require(s.k >= 1 && s.k <= s.n, "gabidulin: need 1 <= k <= n");
  require(s.generators.size() == s.n, "gabidulin: need exactly n generators");
  check_independent(s.generators, *s.field, "gabidulin generators");
}

void validate(const KKSpec& s) {
  check_field(s.field, s.q, s.m, "kk");
  require(s.l >= 1 && s.l <= s.m, "kk: need 1 <= l <= m");
  require(s.k >= 1 && s.k <= s.l, "kk: need 1 <= k <= l");
  require(s.alphas.size() == s.l, "kk: need exactly l alphas");
  check_independent(s.alphas, *s.field, "kk alphas");
}

void validate(const MVSpec& s) {
  require(s.l >= 1 && s.m >= 1, "mv: need l, m >= 1");
  check_field(s.field, s.q, s.m * s.l, "mv");
  require((s.q - 1) % s.l == 0, "mv: l must divide q - 1");
  require(s.k >= 1, "mv: need k >= 1");
  require(s.L >= 1, "mv: need L >= 1");
  require(s.alphas.size() == s.l, "mv: need exactly l alphas");
  check_independent(s.alphas, *s.field, "mv alphas");

  const CodeSpec spec = s;
  const auto count = message_count(spec);
  if (count > kDefaultMessageBudget) throw BudgetExceeded("mv: message space too large to validate");
  const auto layout = packet_layout(spec);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    const auto u = message_at(spec, idx);
    const auto rows = mv_rows(s, u);
    for (unsigned i = 1; i < s.l; ++i)
      for (unsigned j = 1; j <= s.L; ++j)
        require(s.field->is_in_subfield(rows[i][j], s.m, s.q),
                "mv: u^(" + std::to_string(j) + ")(alpha_" + std::to_string(i) +
                    ")/alpha_" + std::to_string(i) + " is not in GF(q^m) for message index " +
                    std::to_string(idx));
    for (const auto& row : rows) (void)pack_vector(row, layout);
  }
}

void validate(const CodeSpec& spec) {
  std::visit([](const auto& s) { validate(s); }, spec);
}

PacketLayout packet_layout(const CodeSpec& spec) {
  return std::visit(
      overloaded{[](const GabidulinSpec& s) { return PacketLayout{{s.m, 0}}; },
                 [](const KKSpec& s) { return PacketLayout{{s.m, 0}, {s.m, 0}}; },
                 [](const MVSpec& s) {
                   const std::size_t full = std::size_t{s.m} * s.l;
                   PacketLayout layout{{full, 0}};
                   for (unsigned j = 0; j < s.L; ++j) {
                     if (s.layout == MvLayout::compressed)
                       layout.push_back({s.m, s.m});
                     else
                       layout.push_back({full, 0});
                   }
                   return layout;
                 }},
      spec);
}

std::size_t ambient_length(const PacketLayout& layout) {
  std::size_t n = 0;
  for (const auto& b : layout) n += b.width;
  return n;
}

BaseVector pack_vector(std::span<const FieldElement> entries, const PacketLayout& layout) {
  if (entries.size() != layout.size())
    throw SpecError("pack_vector: " + std::to_string(entries.size()) + " entries for " +
                    std::to_string(layout.size()) + " blocks");
  BaseVector out;
  out.reserve(ambient_length(layout));
  for (std::size_t b = 0; b < layout.size(); ++b) {
    const auto& e = entries[b];
    const auto& ctx = e.context();
    BaseVector coords;
    if (layout[b].subfield_degree != 0) {
      auto c = ctx.compress(e, layout[b].subfield_degree);
      if (!c) throw SpecError("pack_vector: entry " + ctx.format(e) + " is not in the block's subfield");
      coords = std::move(*c);
    } else {
      coords = ctx.to_vector(e);
    }
    if (coords.size() != layout[b].width) throw SpecError("pack_vector: entry width does not match block width");
    out.insert(out.end(), coords.begin(), coords.end());
  }
  return out;
}

Codeword gabidulin_encode(const GabidulinSpec& spec, std::span<const FieldElement> u) {
  check_message(u, spec.k, *spec.field);
  const auto poly = message_poly(u, spec.q);
  Codeword c;
  c.kind = CodeKind::gabidulin;
  c.message.assign(u.begin(), u.end());
  for (const auto& g : spec.generators) {
    c.symbols.push_back(poly.evaluate(g));
    c.generator.push_back(spec.field->to_vector(c.symbols.back()));
  }
  return c;
}

Codeword kk_encode(const KKSpec& spec, std::span<const FieldElement> u) {
  check_message(u, spec.k, *spec.field);
  const auto poly = message_poly(u, spec.q);
  const auto layout = packet_layout(spec);
  Codeword c;
  c.kind = CodeKind::kk;
  c.message.assign(u.begin(), u.end());
  for (const auto& a : spec.alphas) {
    c.row_entries.push_back({a, poly.evaluate(a)});
    c.generator.push_back(pack_vector(c.row_entries.back(), layout));
  }
  return c;
}

Codeword mv_encode(const MVSpec& spec, std::span<const FieldElement> u) {
  check_message(u, spec.k, *spec.field);
  for (const auto& x : u)
    require(spec.field->is_in_subfield(x, 1, spec.q), "mv: message symbols must lie in GF(q)");
  const auto layout = packet_layout(spec);
  Codeword c;
  c.kind = CodeKind::mv;
  c.message.assign(u.begin(), u.end());
  c.row_entries = mv_rows(spec, u);
  for (std::size_t i = 1; i < c.row_entries.size(); ++i)
    for (std::size_t j = 1; j < c.row_entries[i].size(); ++j)
      require(spec.field->is_in_subfield(c.row_entries[i][j], spec.m, spec.q),
              "mv: ratio entry outside GF(q^m); alphas are not a valid MV selection");
  for (const auto& row : c.row_entries) c.generator.push_back(pack_vector(row, layout));
  return c;
}

Codeword encode(const CodeSpec& spec, std::span<const FieldElement> u) {
  return std::visit(overloaded{[&](const GabidulinSpec& s) { return gabidulin_encode(s, u); },
                               [&](const KKSpec& s) { return kk_encode(s, u); },
                               [&](const MVSpec& s) { return mv_encode(s, u); }},
                    spec);
}

const BaseMatrix& component_matrix(const Codeword& c) { return c.generator; }

namespace {

struct MessageShape {
  unsigned p;
  unsigned symbols;         // k
  unsigned digits_per_symbol;  // m for GF(q^m) messages, 1 for GF(q)
};

MessageShape message_shape(const CodeSpec& spec) {
  return std::visit(overloaded{[](const GabidulinSpec& s) { return MessageShape{s.q, s.k, s.m}; },
                               [](const KKSpec& s) { return MessageShape{s.q, s.k, s.m}; },
                               [](const MVSpec& s) { return MessageShape{s.q, s.k, 1}; }},
                    spec);
}

}  // namespace

std::uint64_t message_count(const CodeSpec& spec) {
  const auto shape = message_shape(spec);
  return saturating_pow(shape.p, std::uint64_t{shape.symbols} * shape.digits_per_symbol);
}

std::vector<FieldElement> message_at(const CodeSpec& spec, std::uint64_t index) {
  const auto shape = message_shape(spec);
  const auto& field = field_of(spec);
  std::vector<FieldElement> u;
  u.reserve(shape.symbols);
  for (unsigned s = 0; s < shape.symbols; ++s) {
    BaseVector coeffs(field.degree(), 0);
    for (unsigned d = 0; d < shape.digits_per_symbol; ++d) {
      coeffs[d] = static_cast<Digit>(index % shape.p);
      index /= shape.p;
    }
    u.push_back(field.from_coeffs(coeffs));
  }
  return u;
}

std::uint64_t message_index(const CodeSpec& spec, std::span<const FieldElement> u) {
  const auto shape = message_shape(spec);
  if (u.size() != shape.symbols) throw SpecError("message has wrong length");
  std::uint64_t index = 0;
  for (std::size_t s = u.size(); s-- > 0;) {
    const auto c = u[s].coeffs();
    for (std::size_t d = shape.digits_per_symbol; d-- > 0;) index = index * shape.p + c[d];
    for (std::size_t d = shape.digits_per_symbol; d < c.size(); ++d)
      if (c[d] != 0) throw SpecError("message symbol outside the message alphabet");
  }
  return index;
}

Codebook build_codebook(const CodeSpec& spec, std::uint64_t max_messages) {
  validate(spec);
  const auto count = message_count(spec);
  if (count > max_messages)
    throw BudgetExceeded("codebook has " + std::to_string(count) + " messages, budget is " +
                         std::to_string(max_messages));
  Codebook book;
  book.spec = spec;
  book.p = field_of(spec).characteristic();
  book.ambient_len = ambient_length(packet_layout(spec));
  book.words.reserve(count);
  book.spaces.reserve(count);
  const bool subspace_kind = kind_of(spec) != CodeKind::gabidulin;
  const std::size_t dim = subspace_kind ? std::visit([](const auto& s) -> std::size_t {
    if constexpr (std::is_same_v<std::decay_t<decltype(s)>, GabidulinSpec>) return s.n;
    else return s.l;
  }, spec) : 0;
  std::set<BaseMatrix> seen;
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    auto word = encode(spec, message_at(spec, idx));
    auto space = Subspace::span(word.generator, book.ambient_len, book.p);
    if (subspace_kind) {
      require(space.dimension() == dim, "codeword for message index " + std::to_string(idx) +
                                            " has dimension " + std::to_string(space.dimension()));
      require(seen.insert(space.basis()).second,
              "two messages map to the same subspace (message index " + std::to_string(idx) + ")");
    }
    book.words.push_back(std::move(word));
    book.spaces.push_back(std::move(space));
  }
  return book;
}

}  // namespace tiercode
