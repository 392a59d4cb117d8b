#pragma once

// Gabidulin, Koetter-Kschischang (KK) and Mahdavifar-Vardy (MV) encoders and
// the packet representation of their codewords.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "tiercode/errors.hpp"
#include "tiercode/gf.hpp"
#include "tiercode/metrics.hpp"

namespace tiercode {

enum class CodeKind { gabidulin, kk, mv };

enum class MvLayout {
  uncompressed,  // every block as wide as the field degree ml
  compressed,    // blocks 1..L as GF(q^m) coordinates (width m)
};

using FieldPtr = std::shared_ptr<const FieldContext>;

/// (n, k) Gabidulin code over GF(q^m).
struct GabidulinSpec {
  FieldPtr field;
  unsigned q = 0, m = 0, n = 0, k = 0;
  std::vector<FieldElement> generators;
};

/// l-dimensional KK code over GF(q^m) with messages in GF(q^m)^k.
struct KKSpec {
  FieldPtr field;
  unsigned q = 0, m = 0, l = 0, k = 0;
  std::vector<FieldElement> alphas;
};

/// l-dimensional MV code over GF(q^(ml)) with list size L and messages in GF(q)^k.
struct MVSpec {
  FieldPtr field;
  unsigned q = 0, m = 0, l = 0, L = 0, k = 0;
  std::vector<FieldElement> alphas;
  MvLayout layout = MvLayout::uncompressed;
};

using CodeSpec = std::variant<GabidulinSpec, KKSpec, MVSpec>;

[[nodiscard]] CodeKind kind_of(const CodeSpec& spec);
[[nodiscard]] const char* to_string(CodeKind kind);
[[nodiscard]] const char* to_string(MvLayout layout);
[[nodiscard]] const FieldContext& field_of(const CodeSpec& spec);

/// Throws SpecError when an invariant fails. MV validation enumerates every
/// message to confirm the subfield membership of the ratio entries.
void validate(const GabidulinSpec& spec);
void validate(const KKSpec& spec);
void validate(const MVSpec& spec);
void validate(const CodeSpec& spec);

/// One block of a packet: `width` base-field coordinates. A nonzero
/// `subfield_degree` means the entry is written in coordinates of GF(p^d).
struct PacketBlock {
  std::size_t width = 0;
  unsigned subfield_degree = 0;
};
using PacketLayout = std::vector<PacketBlock>;

[[nodiscard]] PacketLayout packet_layout(const CodeSpec& spec);
[[nodiscard]] std::size_t ambient_length(const PacketLayout& layout);

/// Concatenated coordinates of each entry per its block. Throws SpecError
/// when an entry is not representable in its block.
[[nodiscard]] BaseVector pack_vector(std::span<const FieldElement> entries, const PacketLayout& layout);

struct Codeword {
  CodeKind kind = CodeKind::gabidulin;
  std::vector<FieldElement> message;
  /// Gabidulin symbols u(g_0), ..., u(g_{n-1}).
  std::vector<FieldElement> symbols;
  /// KK / MV basis rows as field entries before packing.
  std::vector<std::vector<FieldElement>> row_entries;
  /// Component-code generator over GF(p): symbol coordinates (Gabidulin) or
  /// packed basis rows (KK / MV).
  BaseMatrix generator;
};

[[nodiscard]] Codeword gabidulin_encode(const GabidulinSpec& spec, std::span<const FieldElement> u);
[[nodiscard]] Codeword kk_encode(const KKSpec& spec, std::span<const FieldElement> u);
[[nodiscard]] Codeword mv_encode(const MVSpec& spec, std::span<const FieldElement> u);
[[nodiscard]] Codeword encode(const CodeSpec& spec, std::span<const FieldElement> u);

[[nodiscard]] const BaseMatrix& component_matrix(const Codeword& c);

/// Number of messages, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t message_count(const CodeSpec& spec);
/// Message with lexicographic index `index`: base-field digits with the
/// lowest coefficient of u_0 varying fastest.
[[nodiscard]] std::vector<FieldElement> message_at(const CodeSpec& spec, std::uint64_t index);
/// Inverse of message_at.
[[nodiscard]] std::uint64_t message_index(const CodeSpec& spec, std::span<const FieldElement> u);

struct Codebook {
  CodeSpec spec;
  std::vector<Codeword> words;
  /// Row space of each generator; the component codes.
  std::vector<Subspace> spaces;
  unsigned p = 0;
  std::size_t ambient_len = 0;
};

inline constexpr std::uint64_t kDefaultMessageBudget = std::uint64_t{1} << 20;

/// One codeword per message in lexicographic message order. Throws
/// BudgetExceeded when message_count exceeds `max_messages`, and SpecError
/// when two messages of a subspace code collide or lose dimension.
[[nodiscard]] Codebook build_codebook(const CodeSpec& spec,
                                      std::uint64_t max_messages = kDefaultMessageBudget);

}  // namespace tiercode
