#pragma once

#include <cctype>
#include <cstdint>
#include <fstream>
#include <memory>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "tgraph/cas.hpp"
#include "tgraph/cet.hpp"
#include "tgraph/ckdtree.hpp"
#include "tgraph/codecs.hpp"
#include "tgraph/core.hpp"
#include "tgraph/edgelog.hpp"
#include "tgraph/evelog.hpp"
#include "tgraph/oracle.hpp"
#include "tgraph/tgcsa.hpp"

namespace tgraph {

// --- little-endian byte streams ---------------------------------------------

class ByteWriter {
 public:
  void u8(std::uint8_t v) { buf_.push_back(v); }
  void u16(std::uint16_t v) {
    for (int k = 0; k < 2; ++k) buf_.push_back((v >> (8 * k)) & 0xff);
  }
  void u32(std::uint32_t v) {
    for (int k = 0; k < 4; ++k) buf_.push_back((v >> (8 * k)) & 0xff);
  }
  void u64(std::uint64_t v) {
    for (int k = 0; k < 8; ++k) buf_.push_back((v >> (8 * k)) & 0xff);
  }
  void vint(std::uint64_t v) { vint_append(v, buf_); }
  void bytes(std::span<const std::uint8_t> b) {
    buf_.insert(buf_.end(), b.begin(), b.end());
  }
  void str(std::string_view s) {
    vint(s.size());
    buf_.insert(buf_.end(), s.begin(), s.end());
  }
  void byte_block(const std::vector<std::uint8_t>& b) {
    vint(b.size());
    bytes(b);
  }
  void vint_list(const std::vector<std::uint64_t>& xs) {
    vint(xs.size());
    for (std::uint64_t x : xs) vint(x);
  }
  void bitvector(const BitVector& bv) {
    u64(bv.size());
    for (std::uint64_t w : bv.words()) u64(w);
  }

  const std::vector<std::uint8_t>& data() const { return buf_; }
  std::vector<std::uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<std::uint8_t> buf_;
};

class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : data_(data) {}

  std::uint8_t u8() { return take(1)[0]; }
  std::uint16_t u16() { return gather(2); }
  std::uint32_t u32() { return static_cast<std::uint32_t>(gather(4)); }
  std::uint64_t u64() { return gather(8); }
  std::uint64_t vint() { return vint_read(data_, pos_); }
  std::span<const std::uint8_t> take(std::size_t count) {
    if (pos_ + count > data_.size()) throw IoError("truncated stream");
    auto out = data_.subspan(pos_, count);
    pos_ += count;
    return out;
  }
  std::string str() {
    std::uint64_t len = vint();
    auto b = take(len);
    return std::string(b.begin(), b.end());
  }
  std::vector<std::uint8_t> byte_block() {
    std::uint64_t len = vint();
    auto b = take(len);
    return std::vector<std::uint8_t>(b.begin(), b.end());
  }
  std::vector<std::uint64_t> vint_list() {
    std::uint64_t count = vint();
    std::vector<std::uint64_t> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) out.push_back(vint());
    return out;
  }
  BitVector bitvector() {
    std::uint64_t size = u64();
    std::uint64_t words = (size + 63) / 64;
    std::vector<std::uint64_t> w;
    w.reserve(words);
    for (std::uint64_t k = 0; k < words; ++k) w.push_back(u64());
    return BitVector(std::move(w), size);
  }
  bool done() const { return pos_ == data_.size(); }

 private:
  std::uint64_t gather(unsigned count) {
    auto b = take(count);
    std::uint64_t v = 0;
    for (unsigned k = 0; k < count; ++k) v |= std::uint64_t{b[k]} << (8 * k);
    return v;
  }

  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

inline std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)),
                                 std::istreambuf_iterator<char>());
  return data;
}

inline void write_file(const std::string& path,
                       std::span<const std::uint8_t> data) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), data.size());
  if (!out) throw IoError("short write to " + path);
}

// --- contact logs ------------------------------------------------------------

// A parsed contact log: validated contacts plus the inferred or declared
// graph dimensions and an optional per-vertex name table.
struct ContactLog {
  std::vector<Contact> contacts;
  std::uint32_t n = 0;
  std::uint32_t tau = 0;
  std::vector<std::string> names;  // empty, or indexed by vertex id

  std::string vertex_name(VertexId v) const {
    if (v < names.size() && !names[v].empty()) return names[v];
    return std::to_string(v);
  }
};

inline constexpr char kContactLogMagic[4] = {'T', 'G', 'C', 'L'};
inline constexpr char kIndexMagic[4] = {'T', 'G', 'I', 'X'};
inline constexpr std::uint16_t kFormatVersion = 1;

// Text form: records "u v t_begin t_end", one per line; '#' starts a comment;
// "@node <id> <name>" declares a vertex name. Tokens that are not plain
// integers are treated as names and assigned ids on first use.
inline ContactLog parse_contact_text(std::istream& in) {
  ContactLog log;
  std::unordered_map<std::string, VertexId> by_name;
  std::uint32_t max_id_seen = 0;
  bool any_id = false;
  auto intern = [&](const std::string& token, std::size_t line_no) {
    bool numeric = !token.empty() &&
                   std::all_of(token.begin(), token.end(),
                               [](unsigned char c) { return std::isdigit(c); });
    VertexId id;
    if (numeric) {
      try {
        id = static_cast<VertexId>(std::stoul(token));
      } catch (const std::exception&) {
        throw ParseError("vertex id out of range: " + token, line_no);
      }
    } else {
      auto it = by_name.find(token);
      if (it != by_name.end()) {
        id = it->second;
      } else {
        id = any_id ? max_id_seen + 1 : 0;
        by_name.emplace(token, id);
        if (log.names.size() <= id) log.names.resize(id + 1);
        log.names[id] = token;
      }
    }
    max_id_seen = any_id ? std::max(max_id_seen, id) : id;
    any_id = true;
    return id;
  };

  std::string line;
  std::size_t line_no = 0;
  std::uint32_t max_te = 0;
  bool any_contact = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.resize(hash);
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first)) continue;
    if (first == "@node") {
      std::string id_token, name;
      if (!(fields >> id_token >> name))
        throw ParseError("@node needs an id and a name", line_no);
      VertexId id;
      try {
        id = static_cast<VertexId>(std::stoul(id_token));
      } catch (const std::exception&) {
        throw ParseError("@node id must be an integer", line_no);
      }
      by_name[name] = id;
      if (log.names.size() <= id) log.names.resize(id + 1);
      log.names[id] = name;
      max_id_seen = any_id ? std::max(max_id_seen, id) : id;
      any_id = true;
      continue;
    }
    std::string v_token;
    long long tb, te;
    if (!(fields >> v_token >> tb >> te))
      throw ParseError("expected: u v t_begin t_end", line_no);
    std::string trailing;
    if (fields >> trailing)
      throw ParseError("unexpected trailing field: " + trailing, line_no);
    if (tb < 0 || te < 0)
      throw ParseError("timestamps must be non-negative", line_no);
    Contact c;
    c.u = intern(first, line_no);
    c.v = intern(v_token, line_no);
    c.t_begin = static_cast<Timestamp>(tb);
    c.t_end = static_cast<Timestamp>(te);
    log.contacts.push_back(c);
    max_te = std::max(max_te, c.t_end);
    any_contact = true;
  }
  log.n = any_id ? max_id_seen + 1 : 0;
  log.tau = any_contact ? max_te + 1 : 0;
  if (log.names.size() < log.n) log.names.resize(log.n);
  bool any_name = std::any_of(log.names.begin(), log.names.end(),
                              [](const std::string& s) { return !s.empty(); });
  if (!any_name) log.names.clear();
  log.contacts = validate(std::move(log.contacts), log.n, log.tau);
  return log;
}

inline void write_contact_text(const ContactLog& log, std::ostream& out) {
  for (VertexId v = 0; v < log.names.size(); ++v)
    if (!log.names[v].empty()) out << "@node " << v << ' ' << log.names[v] << '\n';
  for (const Contact& c : log.contacts)
    out << log.vertex_name(c.u) << ' ' << log.vertex_name(c.v) << ' '
        << c.t_begin << ' ' << c.t_end << '\n';
}

inline void append_names(ByteWriter& w, const std::vector<std::string>& names) {
  w.vint(names.size());
  for (const std::string& name : names) w.str(name);
}

inline std::vector<std::string> read_names(ByteReader& r) {
  std::uint64_t count = r.vint();
  std::vector<std::string> names;
  names.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) names.push_back(r.str());
  return names;
}

inline std::vector<std::uint8_t> encode_contact_log(const ContactLog& log) {
  ByteWriter w;
  w.bytes(std::span<const std::uint8_t>(
      reinterpret_cast<const std::uint8_t*>(kContactLogMagic), 4));
  w.u16(kFormatVersion);
  std::uint8_t flags = 1;  // directed
  if (!log.names.empty()) flags |= 2;
  w.u8(flags);
  w.u32(log.n);
  w.u32(log.tau);
  w.u64(log.contacts.size());
  if (!log.names.empty()) append_names(w, log.names);
  for (const Contact& c : log.contacts) {
    w.vint(c.u);
    w.vint(c.v);
    w.vint(c.t_begin);
    w.vint(c.t_end);
  }
  return w.take();
}

inline ContactLog decode_contact_log(std::span<const std::uint8_t> data) {
  ByteReader r(data);
  auto magic = r.take(4);
  if (!std::equal(magic.begin(), magic.end(), kContactLogMagic))
    throw UnsupportedVersionError("not a contact log file");
  if (r.u16() != kFormatVersion)
    throw UnsupportedVersionError("unsupported contact log version");
  std::uint8_t flags = r.u8();
  ContactLog log;
  log.n = r.u32();
  log.tau = r.u32();
  std::uint64_t count = r.u64();
  if (flags & 2) log.names = read_names(r);
  log.contacts.reserve(count);
  for (std::uint64_t k = 0; k < count; ++k) {
    Contact c;
    c.u = static_cast<VertexId>(r.vint());
    c.v = static_cast<VertexId>(r.vint());
    c.t_begin = static_cast<Timestamp>(r.vint());
    c.t_end = static_cast<Timestamp>(r.vint());
    log.contacts.push_back(c);
  }
  log.contacts = validate(std::move(log.contacts), log.n, log.tau);
  return log;
}

// Reads a contact log in either representation; binary when the magic
// matches, text otherwise.
inline ContactLog load_contact_log(const std::string& path) {
  std::vector<std::uint8_t> data = read_file(path);
  if (data.size() >= 4 && std::equal(data.begin(), data.begin() + 4,
                                     kContactLogMagic))
    return decode_contact_log(data);
  std::string text(data.begin(), data.end());
  std::istringstream in(text);
  return parse_contact_text(in);
}

// --- index containers --------------------------------------------------------

enum class StructureKind : std::uint8_t {
  kOracle = 0,
  kEdgeLog = 1,
  kEveLog = 2,
  kCas = 3,
  kCet = 4,
  kTgcsa = 5,
  kCkd = 6,
};

inline const char* to_string(StructureKind kind) {
  switch (kind) {
    case StructureKind::kOracle: return "oracle";
    case StructureKind::kEdgeLog: return "edgelog";
    case StructureKind::kEveLog: return "evelog";
    case StructureKind::kCas: return "cas";
    case StructureKind::kCet: return "cet";
    case StructureKind::kTgcsa: return "tgcsa";
    case StructureKind::kCkd: return "ckd";
  }
  return "?";
}

inline std::optional<StructureKind> structure_from_name(std::string_view s) {
  for (StructureKind k :
       {StructureKind::kOracle, StructureKind::kEdgeLog, StructureKind::kEveLog,
        StructureKind::kCas, StructureKind::kCet, StructureKind::kTgcsa,
        StructureKind::kCkd})
    if (s == to_string(k)) return k;
  return std::nullopt;
}

struct BuildOptions {
  bool with_reverse = false;  // edgelog/evelog/cas twin
  bool compress_psi = false;  // tgcsa
};

inline std::unique_ptr<TemporalGraphIndex> build_index(
    StructureKind kind, std::vector<Contact> contacts, std::uint32_t n,
    std::uint32_t tau, const BuildOptions& opt = {}) {
  switch (kind) {
    case StructureKind::kOracle:
      return std::make_unique<OracleIndex>(std::move(contacts), n, tau);
    case StructureKind::kEdgeLog:
      return std::make_unique<EdgeLogIndex>(std::move(contacts), n, tau,
                                            opt.with_reverse);
    case StructureKind::kEveLog:
      return std::make_unique<EveLogIndex>(std::move(contacts), n, tau,
                                           opt.with_reverse);
    case StructureKind::kCas:
      return std::make_unique<CasIndex>(std::move(contacts), n, tau,
                                        opt.with_reverse);
    case StructureKind::kCet:
      return std::make_unique<CetIndex>(std::move(contacts), n, tau);
    case StructureKind::kTgcsa:
      return std::make_unique<TgcsaIndex>(std::move(contacts), n, tau,
                                          opt.compress_psi);
    case StructureKind::kCkd:
      return std::make_unique<CkdIndex>(std::move(contacts), n, tau);
  }
  throw Error("unknown structure kind");
}

// Serializes every structure into one container format: magic, version,
// structure tag, optional name table, then the structure payload.
class IndexCodec {
 public:
  struct Loaded {
    std::unique_ptr<TemporalGraphIndex> index;
    std::vector<std::string> names;
    StructureKind kind = StructureKind::kOracle;
  };

  static std::vector<std::uint8_t> save(
      const TemporalGraphIndex& index,
      const std::vector<std::string>& names = {}) {
    ByteWriter w;
    w.bytes(std::span<const std::uint8_t>(
        reinterpret_cast<const std::uint8_t*>(kIndexMagic), 4));
    w.u16(kFormatVersion);
    w.u8(static_cast<std::uint8_t>(kind_of(index)));
    w.u8(names.empty() ? 0 : 1);
    w.u32(index.vertex_count());
    w.u32(index.lifetime());
    w.u64(index.contact_count());
    if (!names.empty()) append_names(w, names);
    save_payload(index, w);
    return w.take();
  }

  static Loaded load(std::span<const std::uint8_t> data) {
    ByteReader r(data);
    auto magic = r.take(4);
    if (!std::equal(magic.begin(), magic.end(), kIndexMagic))
      throw UnsupportedVersionError("not an index container");
    if (r.u16() != kFormatVersion)
      throw UnsupportedVersionError("unsupported index container version");
    std::uint8_t tag = r.u8();
    if (tag > static_cast<std::uint8_t>(StructureKind::kCkd))
      throw UnsupportedVersionError("unknown structure tag");
    Loaded out;
    out.kind = static_cast<StructureKind>(tag);
    bool has_names = r.u8() & 1;
    std::uint32_t n = r.u32();
    std::uint32_t tau = r.u32();
    std::uint64_t contact_count = r.u64();
    if (has_names) out.names = read_names(r);
    out.index = load_payload(out.kind, r, n, tau, contact_count);
    if (!r.done()) throw IoError("trailing bytes in index container");
    return out;
  }

 private:
  static StructureKind kind_of(const TemporalGraphIndex& index) {
    if (dynamic_cast<const OracleIndex*>(&index)) return StructureKind::kOracle;
    if (dynamic_cast<const EdgeLogIndex*>(&index))
      return StructureKind::kEdgeLog;
    if (dynamic_cast<const EveLogIndex*>(&index)) return StructureKind::kEveLog;
    if (dynamic_cast<const CasIndex*>(&index)) return StructureKind::kCas;
    if (dynamic_cast<const CetIndex*>(&index)) return StructureKind::kCet;
    if (dynamic_cast<const TgcsaIndex*>(&index)) return StructureKind::kTgcsa;
    if (dynamic_cast<const CkdIndex*>(&index)) return StructureKind::kCkd;
    throw Error("unknown index type");
  }

  static void save_payload(const TemporalGraphIndex& index, ByteWriter& w) {
    switch (kind_of(index)) {
      case StructureKind::kOracle:
        return save_oracle(static_cast<const OracleIndex&>(index), w);
      case StructureKind::kEdgeLog:
        return save_edgelog(static_cast<const EdgeLogIndex&>(index), w);
      case StructureKind::kEveLog:
        return save_evelog(static_cast<const EveLogIndex&>(index), w);
      case StructureKind::kCas:
        return save_cas(static_cast<const CasIndex&>(index), w);
      case StructureKind::kCet:
        return save_cet(static_cast<const CetIndex&>(index), w);
      case StructureKind::kTgcsa:
        return save_tgcsa(static_cast<const TgcsaIndex&>(index), w);
      case StructureKind::kCkd:
        return save_ckd(static_cast<const CkdIndex&>(index), w);
    }
  }

  static std::unique_ptr<TemporalGraphIndex> load_payload(
      StructureKind kind, ByteReader& r, std::uint32_t n, std::uint32_t tau,
      std::uint64_t contact_count) {
    switch (kind) {
      case StructureKind::kOracle:
        return load_oracle(r, n, tau, contact_count);
      case StructureKind::kEdgeLog: return load_edgelog(r, n, tau, contact_count);
      case StructureKind::kEveLog: return load_evelog(r, n, tau, contact_count);
      case StructureKind::kCas: return load_cas(r, n, tau, contact_count);
      case StructureKind::kCet: return load_cet(r, n, tau, contact_count);
      case StructureKind::kTgcsa: return load_tgcsa(r, n, tau, contact_count);
      case StructureKind::kCkd: return load_ckd(r, n, tau, contact_count);
    }
    throw Error("unknown structure kind");
  }

  // oracle: the validated contact list itself.
  static void save_oracle(const OracleIndex& x, ByteWriter& w) {
    for (const Contact& c : x.contacts()) {
      w.vint(c.u);
      w.vint(c.v);
      w.vint(c.t_begin);
      w.vint(c.t_end);
    }
  }

  static std::unique_ptr<TemporalGraphIndex> load_oracle(
      ByteReader& r, std::uint32_t n, std::uint32_t tau,
      std::uint64_t contact_count) {
    std::vector<Contact> contacts;
    contacts.reserve(contact_count);
    for (std::uint64_t k = 0; k < contact_count; ++k) {
      Contact c;
      c.u = static_cast<VertexId>(r.vint());
      c.v = static_cast<VertexId>(r.vint());
      c.t_begin = static_cast<Timestamp>(r.vint());
      c.t_end = static_cast<Timestamp>(r.vint());
      contacts.push_back(c);
    }
    return std::make_unique<OracleIndex>(std::move(contacts), n, tau);
  }

  static void save_edgelog(const EdgeLogIndex& x, ByteWriter& w) {
    w.byte_block(x.targets_bytes_);
    w.byte_block(x.intervals_bytes_);
    w.vint_list(x.target_off_);
    w.vint_list(x.target_base_);
    w.vint_list(x.interval_off_);
    w.u8(x.twin_ ? 1 : 0);
    if (x.twin_) save_edgelog(*x.twin_, w);
  }

  static std::unique_ptr<EdgeLogIndex> load_edgelog(
      ByteReader& r, std::uint32_t n, std::uint32_t tau,
      std::uint64_t contact_count) {
    auto x = std::unique_ptr<EdgeLogIndex>(new EdgeLogIndex());
    x->n_ = n;
    x->tau_ = tau;
    x->contact_count_ = contact_count;
    x->targets_bytes_ = r.byte_block();
    x->intervals_bytes_ = r.byte_block();
    x->target_off_ = r.vint_list();
    x->target_base_ = r.vint_list();
    x->interval_off_ = r.vint_list();
    if (r.u8()) x->twin_ = load_edgelog(r, n, tau, contact_count);
    return x;
  }

  static void save_evelog(const EveLogIndex& x, ByteWriter& w) {
    std::vector<std::uint64_t> ranks(x.dict_.rank_to_symbol().begin(),
                                     x.dict_.rank_to_symbol().end());
    w.vint_list(ranks);
    w.byte_block(x.target_bytes_);
    w.byte_block(x.time_bytes_);
    w.vint_list(x.target_off_);
    w.vint_list(x.time_off_);
    w.u8(x.twin_ ? 1 : 0);
    if (x.twin_) save_evelog(*x.twin_, w);
  }

  static std::unique_ptr<EveLogIndex> load_evelog(ByteReader& r,
                                                  std::uint32_t n,
                                                  std::uint32_t tau,
                                                  std::uint64_t contact_count) {
    auto x = std::unique_ptr<EveLogIndex>(new EveLogIndex());
    x->n_ = n;
    x->tau_ = tau;
    x->contact_count_ = contact_count;
    std::vector<std::uint64_t> ranks = r.vint_list();
    x->dict_ = EtdcDictionary::from_ranks(
        std::vector<std::uint32_t>(ranks.begin(), ranks.end()));
    x->target_bytes_ = r.byte_block();
    x->time_bytes_ = r.byte_block();
    x->target_off_ = r.vint_list();
    x->time_off_ = r.vint_list();
    if (r.u8()) x->twin_ = load_evelog(r, n, tau, contact_count);
    return x;
  }

  static void save_wavelet(const WaveletTree& wt, ByteWriter& w) {
    w.u64(wt.size());
    w.u32(wt.sigma());
    for (const BitVector& bv : wt.level_bits()) w.bitvector(bv);
  }

  static WaveletTree load_wavelet(ByteReader& r) {
    std::uint64_t size = r.u64();
    std::uint32_t sigma = r.u32();
    std::uint32_t levels = sigma <= 1 ? 0 : std::bit_width(sigma - 1);
    std::vector<BitVector> bits;
    bits.reserve(levels);
    for (std::uint32_t k = 0; k < levels; ++k) bits.push_back(r.bitvector());
    return WaveletTree(size, sigma, std::move(bits));
  }

  static void save_cas(const CasIndex& x, ByteWriter& w) {
    save_wavelet(x.seq_, w);
    w.bitvector(x.marks_);
    w.u8(x.twin_ ? 1 : 0);
    if (x.twin_) save_cas(*x.twin_, w);
  }

  static std::unique_ptr<CasIndex> load_cas(ByteReader& r, std::uint32_t n,
                                            std::uint32_t tau,
                                            std::uint64_t contact_count) {
    auto x = std::unique_ptr<CasIndex>(new CasIndex());
    x->n_ = n;
    x->tau_ = tau;
    x->contact_count_ = contact_count;
    x->seq_ = load_wavelet(r);
    x->marks_ = r.bitvector();
    if (r.u8()) x->twin_ = load_cas(r, n, tau, contact_count);
    return x;
  }

  static void save_cet(const CetIndex& x, ByteWriter& w) {
    w.u32(x.seq_.sigma_x());
    w.u32(x.seq_.sigma_y());
    save_wavelet(x.seq_.wt_, w);
    w.bitvector(x.marks_);
  }

  static std::unique_ptr<CetIndex> load_cet(ByteReader& r, std::uint32_t n,
                                            std::uint32_t tau,
                                            std::uint64_t contact_count) {
    auto x = std::unique_ptr<CetIndex>(new CetIndex());
    x->n_ = n;
    x->tau_ = tau;
    x->contact_count_ = contact_count;
    std::uint32_t sx = r.u32();
    std::uint32_t sy = r.u32();
    x->seq_ = InterleavedWaveletTree(sx, sy, load_wavelet(r));
    x->marks_ = r.bitvector();
    return x;
  }

  static void save_tgcsa(const TgcsaIndex& x, ByteWriter& w) {
    w.bitvector(x.d_);
    w.u8(x.compressed_ ? 1 : 0);
    if (x.compressed_) {
      w.byte_block(x.psi_bytes_);
      w.bitvector(x.run_starts_);
      w.vint_list(x.run_off_);
    } else {
      w.vint(x.psi_plain_.size());
      for (std::uint32_t v : x.psi_plain_) w.u32(v);
    }
  }

  static std::unique_ptr<TgcsaIndex> load_tgcsa(ByteReader& r, std::uint32_t n,
                                                std::uint32_t tau,
                                                std::uint64_t contact_count) {
    auto x = std::unique_ptr<TgcsaIndex>(new TgcsaIndex());
    x->n_ = n;
    x->tau_ = tau;
    x->contact_count_ = contact_count;
    x->d_ = r.bitvector();
    x->compressed_ = r.u8() != 0;
    if (x->compressed_) {
      x->psi_bytes_ = r.byte_block();
      x->run_starts_ = r.bitvector();
      x->run_off_ = r.vint_list();
    } else {
      std::uint64_t len = r.vint();
      x->psi_plain_.reserve(len);
      for (std::uint64_t k = 0; k < len; ++k) x->psi_plain_.push_back(r.u32());
    }
    return x;
  }

  static void save_ckd(const CkdIndex& x, ByteWriter& w) {
    const CkdIndex::Tree& t = x.tree_;
    w.u32(t.side_);
    w.u64(t.cells_);
    w.bitvector(t.flags_);
    w.bitvector(t.types_);
    w.u64(t.coord_bits_used_);
    for (std::uint64_t word : t.coords_) w.u64(word);
    w.vint_list(t.coord_off_);
  }

  static std::unique_ptr<CkdIndex> load_ckd(ByteReader& r, std::uint32_t n,
                                            std::uint32_t tau,
                                            std::uint64_t contact_count) {
    auto x = std::unique_ptr<CkdIndex>(new CkdIndex());
    x->n_ = n;
    x->tau_ = tau;
    x->contact_count_ = contact_count;
    CkdIndex::Tree& t = x->tree_;
    t.side_ = r.u32();
    t.height_ = static_cast<std::uint32_t>(std::countr_zero(t.side_));
    t.cells_ = r.u64();
    t.flags_ = r.bitvector();
    t.types_ = r.bitvector();
    t.coord_bits_used_ = r.u64();
    std::uint64_t words = (t.coord_bits_used_ + 63) / 64;
    t.coords_.reserve(words);
    for (std::uint64_t k = 0; k < words; ++k) t.coords_.push_back(r.u64());
    t.coord_off_ = r.vint_list();
    return x;
  }
};

}  // namespace tgraph
