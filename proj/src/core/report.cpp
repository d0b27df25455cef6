#include "report.hpp"

#include <sstream>

#include <json.hpp>

#include "set_classes.hpp"

namespace sigma {

using ordered_json = nlohmann::ordered_json;

namespace {

std::string opens_line(const SpaceStructure& space) {
  std::string out;
  for (std::size_t i = 0; i < space.opens.size(); ++i) {
    if (i) out += ' ';
    out += space.ground->format_subset(space.opens[i]);
  }
  return out;
}

std::string points_line(const SpaceStructure& space) {
  std::string out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (i) out += ' ';
    out += space.ground->label(i);
  }
  return out;
}

ordered_json space_json(const SpaceStructure& space) {
  ordered_json doc;
  doc["points"] = space.ground->labels();
  ordered_json opens = ordered_json::array();
  for (Mask m : space.opens) opens.push_back(space.ground->subset_labels(m));
  doc["opens"] = opens;
  return doc;
}

ordered_json witness_json(const SpaceStructure& space, const AxiomWitness& w) {
  ordered_json doc;
  doc["axiom"] = w.axiom;
  ordered_json points = ordered_json::array();
  for (auto p : w.points) points.push_back(space.ground->label(p));
  doc["points"] = points;
  ordered_json sets = ordered_json::array();
  for (Mask m : w.sets) sets.push_back(space.ground->subset_labels(m));
  doc["sets"] = sets;
  doc["note"] = w.note;
  return doc;
}

std::string witness_suffix(const SpaceStructure& space, const AxiomWitness& w) {
  std::string out;
  if (!w.points.empty()) {
    out += " [points: ";
    for (std::size_t i = 0; i < w.points.size(); ++i) {
      if (i) out += ',';
      out += space.ground->label(w.points[i]);
    }
    out += ']';
  }
  if (!w.sets.empty()) {
    out += " [sets: ";
    for (std::size_t i = 0; i < w.sets.size(); ++i) {
      if (i) out += ' ';
      out += space.ground->format_subset(w.sets[i]);
    }
    out += ']';
  }
  return out;
}

const char* yn(bool v) { return v ? "yes" : "no"; }

}  // namespace

std::string render_classify(const ParsedSpace& parsed, bool include_sets, ReportFormat format) {
  const SpaceStructure& space = parsed.space;
  const AxiomReport report = classify(space);

  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["command"] = "classify";
    doc["space"] = space_json(space);
    doc["inserted_empty"] = parsed.inserted_empty;
    doc["inserted_full"] = parsed.inserted_full;
    ordered_json ax;
    for (const auto& name : axiom_names()) ax[name] = report.flags.get(name);
    doc["axioms"] = ax;
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : report.witnesses) witnesses.push_back(witness_json(space, w));
    doc["witnesses"] = witnesses;
    if (include_sets) {
      ordered_json sets = ordered_json::array();
      for (Mask m : subsets_in_canonical_order(space.size())) {
        const SetClassification c = classify_set(space, m);
        ordered_json row;
        row["set"] = space.ground->subset_labels(m);
        row["open"] = c.open;
        row["closed"] = c.closed;
        row["g_closed"] = c.g_closed;
        row["gstar_closed"] = c.gstar_closed;
        row["gstar_open"] = c.gstar_open;
        row["wedge_set"] = c.wedge_set;
        row["vee_set"] = c.vee_set;
        row["g_wedge_set"] = c.g_wedge_set;
        row["g_vee_set"] = c.g_vee_set;
        row["lambda_star_closed"] = c.lambda_star_closed;
        row["lambda_star_open"] = c.lambda_star_open;
        sets.push_back(row);
      }
      doc["sets"] = sets;
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "points (" << space.size() << "): " << points_line(space) << "\n";
  out << "opens (" << space.opens.size() << "): " << opens_line(space) << "\n";
  if (parsed.inserted_empty) out << "note: added the empty set to opens\n";
  if (parsed.inserted_full) out << "note: added the whole set to opens\n";
  out << "axioms:\n";
  for (const auto& name : axiom_names()) {
    out << "  " << name << std::string(10 - name.size(), ' ') << yn(report.flags.get(name))
        << "\n";
  }
  if (!report.witnesses.empty()) {
    out << "witnesses:\n";
    for (const auto& w : report.witnesses)
      out << "  " << w.axiom << ": " << w.note << witness_suffix(space, w) << "\n";
  }
  if (include_sets) {
    out << "sets (open closed g g* g*o wdg vee gw gv l*c l*o):\n";
    for (Mask m : subsets_in_canonical_order(space.size())) {
      const SetClassification c = classify_set(space, m);
      std::string name = space.ground->format_subset(m);
      name.resize(std::max<std::size_t>(name.size(), space.size() + 4), ' ');
      out << "  " << name;
      for (bool f : {c.open, c.closed, c.g_closed, c.gstar_closed, c.gstar_open, c.wedge_set,
                     c.vee_set, c.g_wedge_set, c.g_vee_set, c.lambda_star_closed,
                     c.lambda_star_open})
        out << ' ' << (f ? 'y' : '.');
      out << "\n";
    }
  }
  return out.str();
}

std::string render_enumerate(const EnumerationResult& result, bool up_to_iso, bool count_only,
                             ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["command"] = "enumerate";
    doc["points"] = result.points;
    doc["labeled"] = result.labeled_count;
    if (up_to_iso && result.unlabeled_count) doc["up_to_iso"] = *result.unlabeled_count;
    if (!count_only) {
      ordered_json spaces = ordered_json::array();
      for (const auto& s : result.spaces) {
        ordered_json opens = ordered_json::array();
        for (Mask m : s.opens) opens.push_back(s.ground->subset_labels(m));
        spaces.push_back(opens);
      }
      doc["spaces"] = spaces;
    }
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "points: " << result.points << "\n";
  out << "labeled spaces: " << result.labeled_count << "\n";
  if (up_to_iso && result.unlabeled_count)
    out << "classes up to homeomorphism: " << *result.unlabeled_count << "\n";
  if (!count_only) {
    out << "spaces:\n";
    for (const auto& s : result.spaces) out << "  " << opens_line(s) << "\n";
  }
  return out.str();
}

std::string render_verify(const VerifyReport& report, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["command"] = "verify";
    doc["max_points"] = report.max_points;
    doc["spaces"] = report.total_spaces;
    ordered_json laws = ordered_json::array();
    for (const auto& v : report.laws) {
      ordered_json row;
      row["id"] = v.id;
      row["statement"] = v.statement;
      row["holds"] = v.holds;
      row["spaces_checked"] = v.spaces_checked;
      row["checks"] = v.sets_checked;
      if (v.witness) {
        ordered_json w;
        w["space"] = space_json(v.witness->space);
        ordered_json sets = ordered_json::array();
        for (Mask m : v.witness->witness.sets)
          sets.push_back(v.witness->space.ground->subset_labels(m));
        w["sets"] = sets;
        ordered_json points = ordered_json::array();
        for (auto p : v.witness->witness.points)
          points.push_back(v.witness->space.ground->label(p));
        w["points"] = points;
        w["note"] = v.witness->witness.note;
        row["witness"] = w;
      } else {
        row["witness"] = nullptr;
      }
      laws.push_back(row);
    }
    doc["laws"] = laws;
    doc["all_hold"] = report.all_hold();
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "verify: " << report.laws.size() << " law" << (report.laws.size() == 1 ? "" : "s")
      << " over " << report.total_spaces << " spaces with up to " << report.max_points
      << " points\n";
  for (const auto& v : report.laws) {
    std::string id = v.id;
    id.resize(std::max<std::size_t>(id.size(), 18), ' ');
    out << "  " << id << (v.holds ? "ok     " : "FAILED ") << "checks " << v.sets_checked
        << "\n";
    if (v.witness) {
      const auto& space = v.witness->space;
      out << "    statement: " << v.statement << "\n";
      out << "    witness space (" << space.size() << " points " << points_line(space)
          << "): " << opens_line(space) << "\n";
      if (!v.witness->witness.sets.empty()) {
        out << "    sets:";
        for (Mask m : v.witness->witness.sets) out << ' ' << space.ground->format_subset(m);
        out << "\n";
      }
      if (!v.witness->witness.points.empty()) {
        out << "    points:";
        for (auto p : v.witness->witness.points) out << ' ' << space.ground->label(p);
        out << "\n";
      }
      out << "    note: " << v.witness->witness.note << "\n";
      out << "    compare the definitional predicate implementations on this witness before "
             "treating the statement itself as refuted\n";
    }
  }
  out << (report.all_hold() ? "all laws hold\n" : "some laws FAILED\n");
  return out.str();
}

std::string render_search(const SearchResult& result, ReportFormat format) {
  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["command"] = "search";
    doc["property"] = result.property;
    doc["max_points"] = result.max_points;
    doc["classes_examined"] = result.classes_examined;
    doc["found"] = result.witness.has_value();
    if (result.witness)
      doc["witness"] = space_json(*result.witness);
    else
      doc["witness"] = nullptr;
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  out << "search: " << result.property << " (spaces up to " << result.max_points << " points, "
      << result.classes_examined << " classes examined)\n";
  if (result.witness) {
    out << "found a witness with " << result.witness->size() << " points:\n";
    out << format_space_file(*result.witness);
  } else {
    out << "no space with up to " << result.max_points << " points satisfies the property\n";
  }
  return out.str();
}

std::string render_catalog(const std::vector<ClaimResult>& claims, bool with_steps,
                           ReportFormat format) {
  std::size_t passed = 0;
  for (const auto& c : claims)
    if (c.pass) ++passed;

  if (format == ReportFormat::json) {
    ordered_json doc;
    doc["command"] = "catalog";
    ordered_json rows = ordered_json::array();
    for (const auto& c : claims) {
      ordered_json row;
      row["id"] = c.id;
      row["title"] = c.title;
      row["pass"] = c.pass;
      ordered_json steps = ordered_json::array();
      for (const auto& s : c.steps) {
        ordered_json st;
        st["name"] = s.name;
        st["pass"] = s.pass;
        st["detail"] = s.detail;
        steps.push_back(st);
      }
      row["steps"] = steps;
      rows.push_back(row);
    }
    doc["claims"] = rows;
    doc["passed"] = passed;
    doc["total"] = claims.size();
    return doc.dump(2) + "\n";
  }

  std::ostringstream out;
  for (const auto& c : claims) {
    std::string id = c.id;
    id.resize(std::max<std::size_t>(id.size(), 9), ' ');
    out << "  " << id << (c.pass ? "pass  " : "FAIL  ") << c.title << "\n";
    if (with_steps || !c.pass) {
      for (const auto& s : c.steps) {
        out << "    [" << (s.pass ? "ok" : "FAIL") << "] " << s.name;
        if (!s.detail.empty()) out << " (" << s.detail << ")";
        out << "\n";
      }
    }
  }
  out << passed << "/" << claims.size() << " claims pass\n";
  return out.str();
}

}  // namespace sigma
