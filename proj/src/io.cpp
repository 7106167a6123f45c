#include "persuasion/io.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <sstream>

#include "persuasion/errors.hpp"

namespace persuasion {

namespace {

std::vector<std::string> tokenize(const std::string &line) {
    std::vector<std::string> tokens;
    std::istringstream is(line);
    std::string tok;
    while (is >> tok) {
        if (tok[0] == '#') break;
        tokens.push_back(tok);
    }
    return tokens;
}

}  // namespace

std::string render_ppi(const PersuasionInstance &inst) {
    std::ostringstream os;
    const ProbabilitySpace &space = inst.space;
    for (std::size_t i = 0; i < space.worlds.size(); ++i)
        os << "world " << space.worlds[i].label << ' ' << space.prob[i].str() << '\n';
    for (const NamedEvent &e : space.events) {
        os << "event " << e.name << " excludes";
        for (std::size_t w = 0; w < space.worlds.size(); ++w)
            if (!e.members.test(w)) os << ' ' << space.worlds[w].label;
        os << '\n';
    }
    os << "goal";
    for (std::size_t w = inst.goal.find_first(); w != WorldSet::npos;
         w = inst.goal.find_next(w))
        os << ' ' << space.worlds[w].label;
    os << '\n';
    os << "threshold " << inst.threshold.str() << '\n';
    return os.str();
}

PersuasionInstance parse_ppi(const std::string &text) {
    PersuasionInstance inst;
    ProbabilitySpace &space = inst.space;
    std::vector<std::pair<std::string, std::vector<std::string>>> event_lines;
    std::vector<std::string> goal_labels;
    bool saw_goal = false, saw_threshold = false;

    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        const std::string &kind = tokens[0];
        if (kind == "world") {
            if (tokens.size() != 3) throw ParseError(lineno, "expected: world <label> <p/q>");
            if (space.world_by_label(tokens[1]))
                throw ParseError(lineno, "duplicate world label " + tokens[1]);
            space.worlds.push_back({space.worlds.size(), tokens[1]});
            try {
                space.prob.push_back(Rational::parse(tokens[2]));
            } catch (const InvalidRational &e) {
                throw ParseError(lineno, e.what());
            }
        } else if (kind == "event") {
            if (tokens.size() < 3 || tokens[2] != "excludes")
                throw ParseError(lineno, "expected: event <name> excludes <label>*");
            event_lines.emplace_back(tokens[1],
                                     std::vector<std::string>(tokens.begin() + 3, tokens.end()));
        } else if (kind == "goal") {
            if (saw_goal) throw ParseError(lineno, "duplicate goal line");
            saw_goal = true;
            goal_labels.assign(tokens.begin() + 1, tokens.end());
        } else if (kind == "threshold") {
            if (saw_threshold) throw ParseError(lineno, "duplicate threshold line");
            if (tokens.size() != 2) throw ParseError(lineno, "expected: threshold <p/q>");
            saw_threshold = true;
            try {
                inst.threshold = Rational::parse(tokens[1]);
            } catch (const InvalidRational &e) {
                throw ParseError(lineno, e.what());
            }
        } else {
            throw ParseError(lineno, "unknown directive '" + kind + "'");
        }
    }
    if (!saw_goal) throw ParseError(lineno, "missing goal line");
    if (!saw_threshold) throw ParseError(lineno, "missing threshold line");
    if (inst.threshold < Rational(0) || inst.threshold > Rational(1))
        throw ParseError(lineno, "ThresholdRange: tau = " + inst.threshold.str());

    const std::size_t width = space.worlds.size();
    auto require_world = [&](const std::string &label) {
        const auto idx = space.world_by_label(label);
        if (!idx) throw ParseError(lineno, "unknown world label " + label);
        return *idx;
    };
    for (auto &[name, excluded] : event_lines) {
        if (space.event_by_name(name))
            throw ParseError(lineno, "duplicate event name " + name);
        WorldSet members(width);
        members.set();
        for (const std::string &label : excluded) members.reset(require_world(label));
        space.events.push_back({name, std::move(members)});
    }
    inst.goal.resize(width);
    for (const std::string &label : goal_labels) inst.goal.set(require_world(label));

    const auto violations = validate_space(space);
    if (!violations.empty())
        throw ParseError(lineno, violations.front().invariant + ": " +
                                     violations.front().detail +
                                     (violations.front().subject.empty()
                                          ? ""
                                          : " (" + violations.front().subject + ")"));
    return inst;
}

std::string render_eci(const ExactCoverInstance &eci) {
    std::ostringstream os;
    os << "universe " << eci.universe_size << '\n';
    for (std::size_t i = 0; i < eci.subset_count(); ++i) {
        os << "set " << eci.subset_names[i];
        for (std::size_t e : eci.subsets[i]) os << ' ' << e;
        os << '\n';
    }
    return os.str();
}

ExactCoverInstance parse_eci(const std::string &text) {
    ExactCoverInstance eci;
    bool saw_universe = false;
    std::istringstream is(text);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        const auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "universe") {
            if (saw_universe) throw ParseError(lineno, "duplicate universe line");
            if (tokens.size() != 2) throw ParseError(lineno, "expected: universe <n>");
            try {
                eci.universe_size = std::stoul(tokens[1]);
            } catch (const std::exception &) {
                throw ParseError(lineno, "malformed universe size " + tokens[1]);
            }
            saw_universe = true;
        } else if (tokens[0] == "set") {
            if (!saw_universe) throw ParseError(lineno, "set line before universe line");
            if (tokens.size() < 3) throw ParseError(lineno, "expected: set <name> <index>+");
            std::vector<std::size_t> elems;
            for (std::size_t t = 2; t < tokens.size(); ++t) {
                try {
                    elems.push_back(std::stoul(tokens[t]));
                } catch (const std::exception &) {
                    throw ParseError(lineno, "malformed universe index " + tokens[t]);
                }
            }
            std::sort(elems.begin(), elems.end());
            eci.subset_names.push_back(tokens[1]);
            eci.subsets.push_back(std::move(elems));
        } else {
            throw ParseError(lineno, "unknown directive '" + tokens[0] + "'");
        }
    }
    if (!saw_universe) throw ParseError(lineno, "missing universe line");
    eci.validate();
    return eci;
}

std::string render_roles_json(const ReductionArtifact &art) {
    nlohmann::json j;
    j["params"] = {{"n", art.params.n},     {"k", art.params.k},
                   {"m", art.params.m},     {"x", art.params.x.str()},
                   {"y", art.params.y.str()}, {"z", art.params.z.str()},
                   {"tau", art.params.tau.str()}};
    nlohmann::json roles = nlohmann::json::array();
    for (std::size_t w = 0; w < art.roles.size(); ++w) {
        nlohmann::json r;
        r["world"] = art.instance.space.worlds[w].label;
        switch (art.roles[w].kind) {
            case WorldRole::Kind::W0: r["kind"] = "W0"; break;
            case WorldRole::Kind::X0: r["kind"] = "X0"; break;
            case WorldRole::Kind::Y:
                r["kind"] = "Y";
                r["subset"] = art.roles[w].subset;
                r["element"] = art.roles[w].element;
                break;
            case WorldRole::Kind::Z:
                r["kind"] = "Z";
                r["element"] = art.roles[w].element;
                break;
        }
        roles.push_back(std::move(r));
    }
    j["roles"] = std::move(roles);
    nlohmann::json events;
    for (std::size_t i = 0; i < art.params.k; ++i)
        events[art.source.subset_names[i]] =
            art.instance.space.events[art.event_of_subset[i]].name;
    j["event_of_subset"] = std::move(events);
    return j.dump(2) + "\n";
}

std::string render_observation(const ProbabilitySpace &space, const Observation &obs) {
    std::string out = "{";
    bool first = true;
    for (std::size_t i : obs.selected()) {
        if (!first) out += ",";
        out += space.events[i].name;
        first = false;
    }
    return out + "}";
}

std::string render_persuasion_verdict(const ProbabilitySpace &space,
                                      const PersuasionVerdict &verdict) {
    std::ostringstream os;
    os << "solvable " << (verdict.solvable ? "true" : "false") << '\n';
    if (verdict.witness) os << "witness " << render_observation(space, *verdict.witness) << '\n';
    if (verdict.best_posterior) os << "best_posterior " << verdict.best_posterior->str() << '\n';
    return os.str();
}

std::string render_cover_verdict(const ExactCoverInstance &eci, const CoverVerdict &verdict) {
    std::ostringstream os;
    os << "solvable " << (verdict.solvable ? "true" : "false") << '\n';
    if (verdict.witness) {
        os << "witness {";
        bool first = true;
        for (std::size_t i : *verdict.witness) {
            if (!first) os << ',';
            os << eci.subset_names[i];
            first = false;
        }
        os << "}\n";
    }
    if (verdict.solution_count) os << "solution_count " << *verdict.solution_count << '\n';
    return os.str();
}

}  // namespace persuasion
