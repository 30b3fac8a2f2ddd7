#include "amalg/session.hpp"

#include <algorithm>
#include <regex>
#include <sstream>

#include "amalg/harness.hpp"

namespace amalg {

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

// Comma split that ignores commas nested in () or [].
std::vector<std::string> split_list(std::string_view s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  for (const std::string& item : out)
    if (item.empty()) throw Error(Errc::ParseError, "empty list entry");
  return out;
}

int parse_int(const std::string& s, const std::string& what) {
  static const std::regex number(R"(-?\d+)");
  if (!std::regex_match(s, number)) throw Error(Errc::ParseError, "expected an integer for " + what + ", got '" + s + "'");
  try {
    return std::stoi(s);
  } catch (const std::out_of_range&) {
    throw Error(Errc::ParseError, what + " out of range");
  }
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

std::string vars_to_string(const PolyRing& r) {
  std::vector<std::string> parts;
  for (int i = 0; i < r.nvars(); ++i) parts.push_back(r.name(i) + ":" + std::to_string(r.weight(i)));
  return join(parts, ", ");
}

std::string ints_to_string(const std::vector<int>& v) {
  std::vector<std::string> parts;
  for (int x : v) parts.push_back(std::to_string(x));
  return join(parts, ";");
}

std::string hilbert_check(const PresentedRing& r, int max_degree) {
  const HilbertSeries hs = hilbert_series(free_resolution(FPModule::cyclic(r)));
  const std::vector<long long> series = hs.expand(0, max_degree);
  for (int d = 0; d <= max_degree; ++d)
    if (series[d] != hilbert_function(r, d)) return "mismatch at degree " + std::to_string(d);
  return "ok";
}

bool additively_cyclic(const FiniteRing& r) {
  int x = 0;
  for (int k = 1; k < r.order(); ++k) {
    x = r.add(x, 1);
    if (x == 0) return false;
  }
  return true;
}

}  // namespace

std::string ideal_to_string(const GroebnerBasis& gb) {
  if (gb.is_zero_ideal()) return "0";
  std::vector<std::string> parts;
  for (const Polynomial& g : gb.elements()) parts.push_back(g.to_string());
  return join(parts, ", ");
}

std::string Report::value(std::string_view key) const {
  for (const auto& [k, v] : lines)
    if (k == key) return v;
  return "";
}

std::string Report::to_string() const {
  std::ostringstream out;
  for (const auto& [k, v] : lines) out << k << " = " << v << "\n";
  for (const std::string& n : notes) out << n << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------

void Session::declare(const std::string& name, Kind kind) {
  if (kinds_.count(name)) throw Error(Errc::ParseError, "duplicate name '" + name + "'");
  kinds_[name] = kind;
}

const std::string& Session::require(const std::string& name, Kind kind) const {
  auto it = kinds_.find(name);
  if (it == kinds_.end() || it->second != kind) throw Error(Errc::UnknownReference, "unknown name '" + name + "'");
  return it->first;
}

Session Session::parse(std::string_view text, const SessionOptions& options) {
  Session s;
  s.options_ = options;
  if (options.prime) s.prime_ = *options.prime;
  std::istringstream in{std::string(text)};
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    try {
      s.parse_line(body);
    } catch (const Error& e) {
      throw Error(e.code(), "line " + std::to_string(number) + ": " + e.detail());
    }
  }
  for (const std::string& name : options.assume_equidim) {
    if (!s.rings_.count(name) && !s.amalgams_.count(name))
      throw Error(Errc::UnknownReference, "--assume-equidim: unknown ring '" + name + "'");
    s.equidim_.insert(name);
  }
  return s;
}

void Session::parse_line(std::string_view line_view) {
  const std::string line(line_view);
  const std::string keyword = line.substr(0, line.find_first_of(" \t"));
  std::smatch m;
  auto match = [&](const char* pattern) {
    if (!std::regex_match(line, m, std::regex(pattern)))
      throw Error(Errc::ParseError, "malformed " + keyword + " declaration");
  };

  if (keyword == "field") {
    match(R"(field\s+p\s*=\s*(\d+))");
    if (!options_.prime) {
      const long long p = std::stoll(m[1].str());
      if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint32_t>(p)))
        throw Error(Errc::ParseError, "field modulus " + m[1].str() + " is not a prime below 2^31");
      prime_ = static_cast<std::uint32_t>(p);
    }
  } else if (keyword == "ring") {
    match(R"(ring\s+(\w+)\s+vars\s+(.*?)(?:\s+ideal\s*:\s*(.*))?)");
    const std::string name = m[1];
    std::vector<std::pair<std::string, int>> vars;
    for (const std::string& v : split_list(m[2].str())) {
      std::smatch vm;
      static const std::regex var_re(R"((\w+)\s*(?::\s*(\S+))?)");
      if (!std::regex_match(v, vm, var_re)) throw Error(Errc::ParseError, "bad variable '" + v + "'");
      vars.emplace_back(vm[1], vm[2].matched ? parse_int(vm[2], "weight") : 1);
    }
    std::vector<std::string> gens = split_list(m[3].str());
    declare(name, Kind::Ring);
    rings_[name] = PresentedRing::make(prime_, vars, gens, name);
  } else if (keyword == "hom") {
    match(R"(hom\s+(\w+)\s+(\w+)\s*->\s*(\w+)\s*:\s*(.*))");
    const std::string name = m[1];
    const PresentedRing& src = ring(require(m[2], Kind::Ring));
    const PresentedRing& tgt = ring(require(m[3], Kind::Ring));
    std::vector<Polynomial> images(src.nvars());
    std::vector<bool> seen(src.nvars(), false);
    for (const std::string& item : split_list(m[4].str())) {
      const auto arrow = item.find("->");
      if (arrow == std::string::npos) throw Error(Errc::ParseError, "expected '<var> -> <poly>' in '" + item + "'");
      const std::string var = trim(item.substr(0, arrow));
      const int idx = src.poly_ring()->index_of(var);
      if (idx < 0) throw Error(Errc::UnknownReference, "'" + var + "' is not a variable of " + src.name());
      if (seen[idx]) throw Error(Errc::ParseError, "variable '" + var + "' mapped twice");
      seen[idx] = true;
      images[idx] = tgt.parse(item.substr(arrow + 2));
    }
    for (int i = 0; i < src.nvars(); ++i)
      if (!seen[i]) throw Error(Errc::ParseError, "no image for variable '" + src.poly_ring()->name(i) + "'");
    declare(name, Kind::Hom);
    homs_[name] = hom_check(RingHom{name, src, tgt, std::move(images)});
  } else if (keyword == "ideal") {
    match(R"(ideal\s+(\w+)\s+in\s+(\w+)\s*:\s*(.*))");
    const std::string name = m[1];
    const PresentedRing& r = ring(require(m[2], Kind::Ring));
    IdealHandle h = make_ideal(r, split_list(m[3].str()));
    declare(name, Kind::Ideal);
    ideals_[name] = std::move(h);
  } else if (keyword == "amalgam") {
    match(R"(amalgam\s+(\w+)\s*:\s*(\w+)\s*,\s*(\w+)(?:\s+using\s+(.*))?)");
    const std::string name = m[1];
    const RingHom& f = hom(require(m[2], Kind::Hom));
    const IdealHandle& j = ideal(require(m[3], Kind::Ideal));
    if (!(j.ambient == f.target)) throw Error(Errc::ContextMismatch, "ideal " + m[3].str() + " does not live in the target of " + f.name);
    AmalgamSpec spec{name, f.source, f.target, f, j, {}, AmalgamKind::General, std::nullopt};
    if (m[4].matched) {
      for (const std::string& g : split_list(m[4].str())) spec.generators.push_back(f.target.parse(g));
      if (spec.generators.empty()) throw Error(Errc::ParseError, "empty generator list after 'using'");
    }
    declare(name, Kind::Amalgam);
    amalgams_[name] = std::move(spec);
  } else if (keyword == "duplication") {
    match(R"(duplication\s+(\w+)\s*:\s*(\w+)\s*,\s*(\w+))");
    const std::string name = m[1];
    const PresentedRing& a = ring(require(m[2], Kind::Ring));
    const IdealHandle& i = ideal(require(m[3], Kind::Ideal));
    declare(name, Kind::Amalgam);
    amalgams_[name] = duplication(a, i, name);
  } else if (keyword == "trivext") {
    match(R"(trivext\s+(\w+)\s*:\s*(\w+)\s*,\s*module\s+(.*))");
    const std::string name = m[1];
    const PresentedRing& a = ring(require(m[2], Kind::Ring));
    const std::string spec = trim(m[3].str());
    const RingPtr& s = a.poly_ring();
    FPModule mod;
    std::smatch mm;
    if (spec == "free") {
      mod = FPModule::cyclic(a);
    } else if (spec == "residue") {
      std::vector<Polynomial> vars;
      for (int i = 0; i < s->nvars(); ++i) vars.push_back(Polynomial::variable(s, i));
      mod = FPModule::cyclic(s, IdealBasis::of(s, vars));
    } else if (spec == "canonical") {
      mod = canonical_module(a);
    } else if (std::regex_match(spec, mm, std::regex(R"(quotient\s+(.*))"))) {
      std::vector<Polynomial> gens = a.ideal().elements();
      for (const std::string& g : split_list(mm[1].str())) gens.push_back(a.parse(g));
      mod = FPModule::cyclic(s, IdealBasis::of(s, gens));
    } else if (std::regex_match(spec, mm, std::regex(R"(degrees\s*:\s*(.*?)(?:\s+relations\s*:\s*(.*))?)"))) {
      std::vector<int> degrees;
      for (const std::string& d : split_list(mm[1].str())) degrees.push_back(parse_int(d, "module degree"));
      std::vector<Column> rels;
      for (const std::string& col : split_list(mm[2].str())) {
        if (col.size() < 2 || col.front() != '[' || col.back() != ']')
          throw Error(Errc::ParseError, "relation columns are written [entry, ...]");
        Column c;
        for (const std::string& e : split_list(col.substr(1, col.size() - 2))) c.push_back(a.parse(e));
        if (c.size() != degrees.size())
          throw Error(Errc::ParseError, "relation column " + col + " needs " + std::to_string(degrees.size()) + " entries");
        rels.push_back(std::move(c));
      }
      mod = FPModule(s, std::move(degrees), std::move(rels));
    } else {
      throw Error(Errc::ParseError, "unknown module specification '" + spec + "'");
    }
    declare(name, Kind::Amalgam);
    amalgams_[name] = trivial_extension(a, mod, name);
  } else if (keyword == "assume-equidim") {
    match(R"(assume-equidim\s+(\w+))");
    const std::string name = m[1];
    if (!rings_.count(name) && !amalgams_.count(name)) throw Error(Errc::UnknownReference, "unknown ring '" + name + "'");
    equidim_.insert(name);
  } else if (keyword == "zring") {
    match(R"(zring\s+(\w+)\s+n\s*=\s*(\d+))");
    const std::string name = m[1];
    FiniteRing r = FiniteRing::zmod(parse_int(m[2], "n"), name);
    declare(name, Kind::FiniteRing);
    frings_[name] = std::move(r);
  } else if (keyword == "product") {
    match(R"(product\s+(\w+)\s*=\s*(\w+)\s+x\s+(\w+))");
    const std::string name = m[1];
    const FiniteRing& r1 = finite_ring(require(m[2], Kind::FiniteRing));
    const FiniteRing& r2 = finite_ring(require(m[3], Kind::FiniteRing));
    FiniteRing r = FiniteRing::product(r1, r2, name);
    declare(name, Kind::FiniteRing);
    frings_[name] = std::move(r);
    fproduct_right_[name] = r2.order();
  } else if (keyword == "quotient") {
    match(R"(quotient\s+(\w+)\s*=\s*(\w+)\s*/\s*(\w+))");
    const std::string name = m[1];
    const FiniteRing& r = finite_ring(require(m[2], Kind::FiniteRing));
    const std::string& iname = require(m[3], Kind::FiniteIdeal);
    if (fideal_ring_.at(iname) != m[2].str()) throw Error(Errc::ContextMismatch, "ideal " + iname + " does not live in " + m[2].str());
    FiniteRing q = quotient(r, fideals_.at(iname), name);
    declare(name, Kind::FiniteRing);
    frings_[name] = std::move(q);
  } else if (keyword == "fideal" || keyword == "fhom") {
    const bool is_ideal_decl = keyword == "fideal";
    if (is_ideal_decl) match(R"(fideal\s+(\w+)\s+in\s+(\w+)\s*:\s*(.*))");
    else match(R"(fhom\s+(\w+)\s+(\w+)\s*->\s*(\w+)\s*:\s*(.*))");
    const std::string name = m[1];
    const std::string target_name = is_ideal_decl ? m[2].str() : m[3].str();
    const FiniteRing& target = finite_ring(require(target_name, Kind::FiniteRing));
    std::vector<int> elems;
    for (const std::string& e : split_list(m[is_ideal_decl ? 3 : 4].str())) {
      std::smatch em;
      int label;
      if (std::regex_match(e, em, std::regex(R"(\(\s*(\d+)\s*,\s*(\d+)\s*\))"))) {
        auto it = fproduct_right_.find(target_name);
        if (it == fproduct_right_.end()) throw Error(Errc::ParseError, "pair element in non-product ring " + target_name);
        const int a = parse_int(em[1], "element"), b = parse_int(em[2], "element");
        if (b >= it->second || a >= target.order() / it->second) throw Error(Errc::InvalidArgument, "element " + e + " out of range");
        label = FiniteRing::pair_label(a, b, it->second);
      } else {
        label = parse_int(e, "element");
      }
      if (label < 0 || label >= target.order()) throw Error(Errc::InvalidArgument, "element " + e + " out of range");
      elems.push_back(label);
    }
    if (is_ideal_decl) {
      FiniteIdeal i = ideal_generated(target, elems);
      declare(name, Kind::FiniteIdeal);
      fideals_[name] = std::move(i);
      fideal_ring_[name] = target_name;
    } else {
      const FiniteRing& source = finite_ring(require(m[2], Kind::FiniteRing));
      if (elems.size() == 1 && source.order() > 1 && additively_cyclic(source)) {
        std::vector<int> images(source.order(), 0);
        int x = 0, y = 0;
        for (int k = 1; k < source.order(); ++k) {
          x = source.add(x, 1);
          y = target.add(y, elems[0]);
          images[x] = y;
        }
        elems = std::move(images);
      }
      FiniteHom f = finite_hom_check(FiniteHom{name, source, target, std::move(elems)});
      declare(name, Kind::FiniteHom);
      fhoms_[name] = std::move(f);
    }
  } else if (keyword == "famalgam") {
    match(R"(famalgam\s+(\w+)\s*:\s*(\w+)\s*,\s*(\w+))");
    const std::string name = m[1];
    const std::string& fname = require(m[2], Kind::FiniteHom);
    const std::string& iname = require(m[3], Kind::FiniteIdeal);
    const FiniteHom& f = fhoms_.at(fname);
    if (fideal_ring_.at(iname) != f.target.name())
      throw Error(Errc::ContextMismatch, "ideal " + iname + " does not live in " + f.target.name());
    FiniteAmalgam w = build_amalgam(f, fideals_.at(iname), name);
    declare(name, Kind::FiniteAmalgam);
    famalgams_[name] = std::move(w);
  } else {
    throw Error(Errc::ParseError, "unknown declaration '" + keyword + "'");
  }
}

// ---------------------------------------------------------------------------

const PresentedRing& Session::ring(const std::string& name) const { return rings_.at(require(name, Kind::Ring)); }
const RingHom& Session::hom(const std::string& name) const { return homs_.at(require(name, Kind::Hom)); }
const IdealHandle& Session::ideal(const std::string& name) const { return ideals_.at(require(name, Kind::Ideal)); }
const AmalgamSpec& Session::amalgam_spec(const std::string& name) const {
  return amalgams_.at(require(name, Kind::Amalgam));
}
const FiniteRing& Session::finite_ring(const std::string& name) const {
  return frings_.at(require(name, Kind::FiniteRing));
}
const FiniteIdeal& Session::finite_ideal(const std::string& name) const {
  return fideals_.at(require(name, Kind::FiniteIdeal));
}
const FiniteAmalgam& Session::finite_amalgam(const std::string& name) const {
  return famalgams_.at(require(name, Kind::FiniteAmalgam));
}

const AmalgamPresentation& Session::presentation(const std::string& name) const {
  const AmalgamSpec& spec = amalgam_spec(name);
  auto it = presentations_.find(name);
  if (it == presentations_.end()) {
    AmalgamPresentation p = amalgam_present(spec);
    p.certificate = verify_presentation(p);
    it = presentations_.emplace(name, std::move(p)).first;
  }
  return it->second;
}

Report Session::present(const std::string& name) const {
  const AmalgamPresentation& p = presentation(name);
  Report r;
  r.add("amalgam", name);
  r.add("vars", vars_to_string(*p.c));
  r.add("K", ideal_to_string(p.k()));
  r.add("certificate", p.certificate.to_string());
  if (p.certificate.kind == CertKind::NotSurjective) {
    r.add("witness_degree", std::to_string(p.certificate.witness_degree));
    r.exit_status = 1;
  }
  r.add("hilbert_series", hilbert_series(p.ring).to_string());
  const std::string check = hilbert_check(p.ring, options_.max_degree);
  r.add("hilbert_check", check);
  if (check != "ok") r.exit_status = 1;
  return r;
}

Report Session::classify_report(const std::string& name) const {
  auto it = kinds_.find(name);
  if (it == kinds_.end() || (it->second != Kind::Ring && it->second != Kind::Amalgam))
    throw Error(Errc::UnknownReference, "unknown ring or amalgam '" + name + "'");
  const PresentedRing& r = it->second == Kind::Ring ? ring(name) : presentation(name).ring;
  Report rep;
  for (auto& [k, v] : classify(r, {equidimensional(name)}).lines()) rep.add(k, v);
  const std::string check = hilbert_check(r, options_.max_degree);
  rep.add("hilbert_check", check);
  if (check != "ok") rep.exit_status = 1;
  return rep;
}

Report Session::canonical(const std::string& name) const {
  const PresentedRing& r = ring(name);
  const FPModule w = canonical_module(r);
  Report rep;
  rep.add("generators", std::to_string(w.num_generators()));
  rep.add("degrees", ints_to_string(w.degrees()));
  rep.add("relations", std::to_string(w.num_relations()));
  rep.add("hilbert_series", hilbert_series(w).to_string());
  return rep;
}

Report Session::hom_into(const std::string& name) const {
  const AmalgamPresentation& p = presentation(name);
  const IdealHandle h = hom_A_into_R(p);
  Report rep;
  std::vector<std::string> gens;
  for (const Polynomial& g : h.generators) gens.push_back(g.to_string());
  rep.add("hom_into", gens.empty() ? "0" : join(gens, ", "));
  rep.add("hilbert_series", hom_A_into_R_series(p).to_string());
  return rep;
}

Report Session::finite_check(const std::string& name) const {
  const FiniteAmalgam& w = finite_amalgam(name);
  const PrimeClassification c = classify_primes(w);
  const long expected = static_cast<long>(w.f.source.order()) * w.j.size();
  const bool embedding = embedding_holds(w);
  Report rep;
  rep.add("order", std::to_string(w.ring.order()));
  rep.add("expected_order", std::to_string(expected));
  rep.add("primes", std::to_string(c.spectrum.size()));
  rep.add("candidates", std::to_string(c.candidates.size()));
  rep.add("embedding", embedding ? "ok" : "fail");
  rep.add("maximal", c.maximal_match ? "match" : "mismatch");
  rep.add("classification", c.match() ? "match" : "mismatch");
  if (!c.match() || !embedding || w.ring.order() != expected) rep.exit_status = 1;
  return rep;
}

Report Session::run(std::string_view command) const {
  std::istringstream in{std::string(command)};
  std::vector<std::string> words;
  for (std::string w; in >> w;) words.push_back(w);
  if (words.empty()) throw Error(Errc::ParseError, "empty command");
  const std::string& cmd = words[0];
  if (cmd == "verify-paper" && words.size() == 1) return verify_paper(prime_, options_.max_degree).to_report();
  if (cmd == "finite" && words.size() == 3 && words[1] == "check") return finite_check(words[2]);
  if (words.size() != 2) throw Error(Errc::ParseError, "malformed command '" + trim(command) + "'");
  if (cmd == "present") return present(words[1]);
  if (cmd == "classify") return classify_report(words[1]);
  if (cmd == "canonical") return canonical(words[1]);
  if (cmd == "hom-into") return hom_into(words[1]);
  throw Error(Errc::ParseError, "unknown command '" + cmd + "'");
}

}  // namespace amalg
