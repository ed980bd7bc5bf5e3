#include "kerbwsn/scenario.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

namespace kerbwsn {

Scenario default_scenario() {
    Scenario s;
    s.realms = {
        RealmSpec{"WSN",
                  {UserSpec{"alice", "correct-horse", 1001, true},
                   UserSpec{"bob", "swordfish", 1002, true},
                   UserSpec{"mallory", "guessme", 1999, false}},
                  {ServiceSpec{"bs1", 10}}},
        RealmSpec{"FIELD",
                  {UserSpec{"carol", "tumbleweed", 2001, true}},
                  {ServiceSpec{"bs2", 10}}},
    };
    return s;
}

namespace {

std::string trim(std::string_view s) {
    std::size_t begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return "";
    std::size_t end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

bool name_ok(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '-';
        if (!ok) return false;
    }
    return true;
}

// Passwords must survive the text format: printable ASCII, no commas, and
// no edge whitespace (field values are trimmed).
bool password_ok(std::string_view s) {
    if (s.empty()) return false;
    if (s.front() == ' ' || s.back() == ' ') return false;
    for (char c : s) {
        if (c < 0x20 || c > 0x7e || c == ',') return false;
    }
    return true;
}

bool parse_u64(const std::string& s, std::uint64_t& out) {
    if (s.empty()) return false;
    out = 0;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
        std::uint64_t digit = static_cast<std::uint64_t>(c - '0');
        if (out > (UINT64_MAX - digit) / 10) return false;
        out = out * 10 + digit;
    }
    return true;
}

bool parse_u32(const std::string& s, std::uint32_t& out) {
    std::uint64_t v;
    if (!parse_u64(s, v) || v > UINT32_MAX) return false;
    out = static_cast<std::uint32_t>(v);
    return true;
}

bool parse_i64_positive(const std::string& s, std::int64_t& out) {
    std::uint64_t v;
    if (!parse_u64(s, v) || v > static_cast<std::uint64_t>(INT64_MAX)) return false;
    out = static_cast<std::int64_t>(v);
    return true;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

ScenarioError parse_error(int line, std::string message) {
    return ScenarioError{ErrorKind::ParseError, line, std::move(message)};
}

ScenarioError validation_error(std::string message) {
    return ScenarioError{ErrorKind::ValidationError, 0, std::move(message)};
}

RealmSpec& realm_entry(Scenario& s, const std::string& name) {
    for (RealmSpec& realm : s.realms) {
        if (realm.name == name) return realm;
    }
    s.realms.push_back(RealmSpec{name, {}, {}});
    return s.realms.back();
}

} // namespace

Result<Unit, ScenarioError> validate_scenario(const Scenario& s) {
    if (s.max_ticks == 0) return validation_error("sim.max_ticks must be positive");
    if (s.area < 1) return validation_error("topology.area must be at least 1");
    if (s.range < 0) return validation_error("topology.range must be non-negative");
    if (s.reading_packet == 0 || s.query_packet == 0) {
        return validation_error("packet sizes must be positive");
    }
    if (!energy_params_valid(s.energy)) {
        return validation_error("energy.verify must be less than energy.tx_fixed");
    }
    if (s.kdc.tgt_lifetime == 0 || s.kdc.service_ticket_lifetime == 0 ||
        s.kdc.max_clock_skew == 0) {
        return validation_error("kdc lifetimes and skew must be positive");
    }
    if (s.fig10_user_counts.empty()) {
        return validation_error("figure10.user_counts must be non-empty");
    }
    if (s.fig13_energies.empty()) return validation_error("figure13.energies must be non-empty");
    for (std::uint64_t e : s.fig13_energies) {
        if (e == 0) return validation_error("figure13.energies must be positive");
    }
    if (!std::is_sorted(s.fig13_energies.begin(), s.fig13_energies.end())) {
        return validation_error("figure13.energies must be sorted ascending");
    }

    if (s.realms.empty()) return validation_error("at least one realm is required");
    std::set<std::string> realm_names;
    for (const RealmSpec& realm : s.realms) {
        if (!name_ok(realm.name)) return validation_error("realm name is invalid: " + realm.name);
        if (!realm_names.insert(realm.name).second) {
            return validation_error("duplicate realm: " + realm.name);
        }
        std::set<std::uint32_t> addrs;
        std::set<std::string> principal_names;
        for (const UserSpec& user : realm.users) {
            if (!name_ok(user.name)) {
                return validation_error("user name is invalid: " + user.name);
            }
            if (!password_ok(user.password)) {
                return validation_error("password is empty or not format-safe for user " +
                                        user.name);
            }
            if (user.addr == 0 || user.addr == 1) {
                return validation_error("address 0 and 1 are reserved (user " + user.name + ")");
            }
            if (!addrs.insert(user.addr).second) {
                return validation_error("duplicate address in realm " + realm.name);
            }
            if (!principal_names.insert(user.name).second) {
                return validation_error("duplicate principal in realm " + realm.name);
            }
        }
        for (const ServiceSpec& service : realm.services) {
            if (!name_ok(service.name)) {
                return validation_error("service name is invalid: " + service.name);
            }
            if (service.addr == 0 || service.addr == 1) {
                return validation_error("address 0 and 1 are reserved (service " + service.name +
                                        ")");
            }
            if (!addrs.insert(service.addr).second) {
                return validation_error("duplicate address in realm " + realm.name);
            }
            if (!principal_names.insert(service.name).second) {
                return validation_error("duplicate principal in realm " + realm.name);
            }
        }
    }

    const RealmSpec& primary = s.realms.front();
    bool has_authorized = std::any_of(primary.users.begin(), primary.users.end(),
                                      [](const UserSpec& u) { return u.authorized; });
    if (!has_authorized) {
        return validation_error("first realm needs at least one authorized user");
    }
    if (primary.services.empty()) {
        return validation_error("first realm needs at least one service");
    }
    return Unit{};
}

Result<Scenario, ScenarioError> parse_scenario(std::string_view text) {
    Scenario s;
    s.realms.clear();

    std::set<std::string> seen_keys;
    std::istringstream in{std::string(text)};
    std::string raw_line;
    int line_no = 0;

    while (std::getline(in, raw_line)) {
        ++line_no;
        std::string line = trim(raw_line);
        if (line.empty() || line[0] == '#') continue;

        std::size_t eq = line.find('=');
        if (eq == std::string::npos) return parse_error(line_no, "expected `key = value`");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty()) return parse_error(line_no, "empty key");
        if (!seen_keys.insert(key).second) return parse_error(line_no, "duplicate key: " + key);

        std::vector<std::string> parts = split(key, '.');
        bool ok = true;

        if (parts.size() == 2 && parts[0] == "sim") {
            if (parts[1] == "seed") ok = parse_u64(value, s.seed);
            else if (parts[1] == "max_ticks") ok = parse_u64(value, s.max_ticks);
            else return parse_error(line_no, "unknown key: " + key);
        } else if (parts.size() == 2 && parts[0] == "topology") {
            if (parts[1] == "nodes") ok = parse_u32(value, s.n_nodes);
            else if (parts[1] == "area") ok = parse_i64_positive(value, s.area);
            else if (parts[1] == "range") ok = parse_i64_positive(value, s.range);
            else if (parts[1] == "reading_packet") ok = parse_u32(value, s.reading_packet);
            else if (parts[1] == "query_packet") ok = parse_u32(value, s.query_packet);
            else return parse_error(line_no, "unknown key: " + key);
        } else if (parts.size() == 2 && parts[0] == "energy") {
            if (parts[1] == "initial") ok = parse_u64(value, s.energy.initial_energy);
            else if (parts[1] == "tx_fixed") ok = parse_u64(value, s.energy.cost_fixed_tx);
            else if (parts[1] == "tx_per_byte") ok = parse_u64(value, s.energy.cost_per_byte);
            else if (parts[1] == "verify") ok = parse_u64(value, s.energy.verify_cost);
            else return parse_error(line_no, "unknown key: " + key);
        } else if (parts.size() == 2 && parts[0] == "kdc") {
            if (parts[1] == "tgt_lifetime") ok = parse_u64(value, s.kdc.tgt_lifetime);
            else if (parts[1] == "service_ticket_lifetime")
                ok = parse_u64(value, s.kdc.service_ticket_lifetime);
            else if (parts[1] == "max_clock_skew") ok = parse_u64(value, s.kdc.max_clock_skew);
            else return parse_error(line_no, "unknown key: " + key);
        } else if (parts.size() == 2 && parts[0] == "figure10" && parts[1] == "user_counts") {
            s.fig10_user_counts.clear();
            for (const std::string& item : split(value, ',')) {
                std::uint32_t v;
                if (!parse_u32(trim(item), v)) {
                    return parse_error(line_no, "bad count in figure10.user_counts");
                }
                s.fig10_user_counts.push_back(v);
            }
        } else if (parts.size() == 2 && parts[0] == "figure13" && parts[1] == "energies") {
            s.fig13_energies.clear();
            for (const std::string& item : split(value, ',')) {
                std::uint64_t v;
                if (!parse_u64(trim(item), v)) {
                    return parse_error(line_no, "bad energy in figure13.energies");
                }
                s.fig13_energies.push_back(v);
            }
        } else if (parts.size() == 4 && parts[0] == "realm" && parts[2] == "user") {
            // realm.<name>.user.<user> = <password>,<addr>,<authorized|unauthorized>
            std::vector<std::string> fields = split(value, ',');
            if (fields.size() != 3) {
                return parse_error(line_no, "expected `password,addr,authorized|unauthorized`");
            }
            UserSpec user;
            user.name = parts[3];
            user.password = trim(fields[0]);
            if (!parse_u32(trim(fields[1]), user.addr)) {
                return parse_error(line_no, "bad address");
            }
            std::string flag = trim(fields[2]);
            if (flag == "authorized") user.authorized = true;
            else if (flag == "unauthorized") user.authorized = false;
            else return parse_error(line_no, "bad flag: " + flag);
            realm_entry(s, parts[1]).users.push_back(user);
        } else if (parts.size() == 4 && parts[0] == "realm" && parts[2] == "service") {
            // realm.<name>.service.<service> = <addr>
            ServiceSpec service;
            service.name = parts[3];
            if (!parse_u32(value, service.addr)) return parse_error(line_no, "bad address");
            realm_entry(s, parts[1]).services.push_back(service);
        } else {
            return parse_error(line_no, "unknown key: " + key);
        }

        if (!ok) return parse_error(line_no, "bad value for " + key + ": " + value);
    }

    if (s.realms.empty()) s.realms = default_scenario().realms;

    if (auto v = validate_scenario(s); !v) return v.error();
    return s;
}

Result<Scenario, ScenarioError> load_scenario_file(const std::string& path) {
    namespace fs = std::filesystem;
    std::string resolved = path;
    if (!fs::exists(resolved)) {
        // Relative fixture names may live under KERBWSN_SCENARIO_DIR.
        const char* dir = std::getenv("KERBWSN_SCENARIO_DIR");
        if (dir != nullptr && fs::path(path).is_relative()) {
            fs::path candidate = fs::path(dir) / path;
            if (fs::exists(candidate)) resolved = candidate.string();
        }
    }
    std::ifstream in(resolved, std::ios::binary);
    if (!in) {
        return ScenarioError{ErrorKind::ParseError, 0, "cannot open scenario file: " + path};
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_scenario(buffer.str());
}

std::string render_scenario(const Scenario& s) {
    std::ostringstream out;
    out << "sim.seed = " << s.seed << '\n';
    out << "sim.max_ticks = " << s.max_ticks << '\n';
    out << "topology.nodes = " << s.n_nodes << '\n';
    out << "topology.area = " << s.area << '\n';
    out << "topology.range = " << s.range << '\n';
    out << "topology.reading_packet = " << s.reading_packet << '\n';
    out << "topology.query_packet = " << s.query_packet << '\n';
    out << "energy.initial = " << s.energy.initial_energy << '\n';
    out << "energy.tx_fixed = " << s.energy.cost_fixed_tx << '\n';
    out << "energy.tx_per_byte = " << s.energy.cost_per_byte << '\n';
    out << "energy.verify = " << s.energy.verify_cost << '\n';
    out << "kdc.tgt_lifetime = " << s.kdc.tgt_lifetime << '\n';
    out << "kdc.service_ticket_lifetime = " << s.kdc.service_ticket_lifetime << '\n';
    out << "kdc.max_clock_skew = " << s.kdc.max_clock_skew << '\n';
    out << "figure10.user_counts = ";
    for (std::size_t i = 0; i < s.fig10_user_counts.size(); ++i) {
        if (i > 0) out << ',';
        out << s.fig10_user_counts[i];
    }
    out << '\n';
    out << "figure13.energies = ";
    for (std::size_t i = 0; i < s.fig13_energies.size(); ++i) {
        if (i > 0) out << ',';
        out << s.fig13_energies[i];
    }
    out << '\n';
    for (const RealmSpec& realm : s.realms) {
        for (const UserSpec& user : realm.users) {
            out << "realm." << realm.name << ".user." << user.name << " = " << user.password
                << ',' << user.addr << ',' << (user.authorized ? "authorized" : "unauthorized")
                << '\n';
        }
        for (const ServiceSpec& service : realm.services) {
            out << "realm." << realm.name << ".service." << service.name << " = "
                << service.addr << '\n';
        }
    }
    return out.str();
}

} // namespace kerbwsn
