#include "rsdensity/family_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rsdensity/error.hpp"

namespace rsd {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

ordered_json complex_to_json(Complex z) { return ordered_json::array({z.real(), z.imag()}); }

Complex complex_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(where + ": expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

std::vector<Complex> complex_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected a list of [re, im] pairs");
  std::vector<Complex> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(complex_from(j[i], where + "[" + std::to_string(i) + "]"));
  }
  return out;
}

const json& field(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key)) {
    throw InputError(where + ": missing field '" + key + "'");
  }
  return obj.at(key);
}

std::int64_t integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where + ": expected an integer");
  return j.get<std::int64_t>();
}

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

std::string family_to_json(const Family& family) {
  ordered_json doc;
  doc["version"] = kFamilyFormatVersion;
  doc["n"] = family.rank;
  ordered_json reps = ordered_json::array();
  for (const auto& rep : family.reps) {
    ordered_json r;
    r["id"] = rep.id;
    r["arith_conductor"] = rep.arith_conductor;
    ordered_json arch = ordered_json::array();
    for (const auto& mu : rep.archimedean.mu) arch.push_back(complex_to_json(mu));
    r["archimedean"] = arch;
    ordered_json finite = ordered_json::object();
    for (const auto& [p, local] : rep.finite_places) {
      ordered_json place;
      if (const auto* unr = std::get_if<UnramifiedLocal>(&local)) {
        place["type"] = "unramified";
        ordered_json mu = ordered_json::array();
        for (const auto& z : unr->mu) mu.push_back(complex_to_json(z));
        place["mu"] = mu;
      } else {
        place["type"] = "ramified";
        ordered_json segs = ordered_json::array();
        for (const auto& seg : std::get<RamifiedLocal>(local).segments) {
          ordered_json s;
          s["twist_class"] = seg.twist_class;
          s["r"] = seg.r;
          s["L"] = seg.L;
          s["s"] = complex_to_json(seg.s);
          segs.push_back(s);
        }
        place["segments"] = segs;
      }
      finite[std::to_string(p)] = place;
    }
    r["finite"] = finite;
    reps.push_back(r);
  }
  doc["reps"] = reps;
  return doc.dump(2) + "\n";
}

Family family_from_json(std::string_view text) {
  const json doc = parse(text);
  const auto version = integer(field(doc, "version", "family"), "family.version");
  if (version != kFamilyFormatVersion) {
    throw InputError("family: unsupported version " + std::to_string(version));
  }
  Family family;
  family.rank = static_cast<int>(integer(field(doc, "n", "family"), "family.n"));
  const json& reps = field(doc, "reps", "family");
  if (!reps.is_array()) throw InputError("family.reps: expected a list");
  for (std::size_t i = 0; i < reps.size(); ++i) {
    const std::string where = "family.reps[" + std::to_string(i) + "]";
    const json& r = reps[i];
    Representation rep;
    const json& id = field(r, "id", where);
    if (!id.is_string()) throw InputError(where + ".id: expected a string");
    rep.id = id.get<std::string>();
    rep.rank = family.rank;
    const auto cond = integer(field(r, "arith_conductor", where), where + ".arith_conductor");
    if (cond < 1) throw InputError(where + ".arith_conductor: must be >= 1");
    rep.arith_conductor = static_cast<std::uint64_t>(cond);
    rep.archimedean.mu = complex_vector(field(r, "archimedean", where), where + ".archimedean");
    const json& finite = field(r, "finite", where);
    if (!finite.is_object()) throw InputError(where + ".finite: expected an object");
    for (const auto& [key, place] : finite.items()) {
      const std::string pw = where + ".finite[" + key + "]";
      std::uint64_t p = 0;
      try {
        std::size_t used = 0;
        p = std::stoull(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw InputError(pw + ": key is not an integer prime");
      }
      const json& type = field(place, "type", pw);
      if (type == "unramified") {
        rep.finite_places[p] = UnramifiedLocal{complex_vector(field(place, "mu", pw), pw + ".mu")};
      } else if (type == "ramified") {
        RamifiedLocal local;
        const json& segs = field(place, "segments", pw);
        if (!segs.is_array()) throw InputError(pw + ".segments: expected a list");
        for (std::size_t k = 0; k < segs.size(); ++k) {
          const std::string sw = pw + ".segments[" + std::to_string(k) + "]";
          RamifiedSegment seg;
          const json& cls = field(segs[k], "twist_class", sw);
          if (!cls.is_string()) throw InputError(sw + ".twist_class: expected a string");
          seg.twist_class = cls.get<std::string>();
          seg.r = static_cast<int>(integer(field(segs[k], "r", sw), sw + ".r"));
          seg.L = static_cast<int>(integer(field(segs[k], "L", sw), sw + ".L"));
          seg.s = complex_from(field(segs[k], "s", sw), sw + ".s");
          local.segments.push_back(std::move(seg));
        }
        rep.finite_places[p] = std::move(local);
      } else {
        throw InputError(pw + ".type: expected \"unramified\" or \"ramified\"");
      }
    }
    family.reps.push_back(std::move(rep));
  }
  return family;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Family load_family(const std::filesystem::path& path) { return family_from_json(read_text_file(path)); }

std::vector<Complex> complex_list_from_json(std::string_view text) {
  return complex_vector(parse(text), "list");
}

std::vector<std::vector<Complex>> complex_matrix_from_json(std::string_view text) {
  const json doc = parse(text);
  if (!doc.is_array()) throw InputError("matrix: expected a list of rows");
  std::vector<std::vector<Complex>> rows;
  for (std::size_t i = 0; i < doc.size(); ++i) {
    rows.push_back(complex_vector(doc[i], "matrix[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) throw InputError("matrix: ragged rows");
  }
  return rows;
}

}  // namespace rsd
