#include "heckelr/cli.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "heckelr/json_io.hpp"
#include "heckelr/schurweyl.hpp"
#include "heckelr/sweep.hpp"

namespace heckelr::cli {

using json_io::json;

std::vector<Int> parse_int_list(const std::string& text)
{
    std::vector<Int> values;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        if (item.empty())
            throw UsageError("empty entry in integer list '" + text + "'");
        Int value = 0;
        const auto [end, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || end != item.data() + item.size())
            throw UsageError("not an integer: '" + item + "'");
        if (value < 0)
            throw UsageError("negative entry in '" + text + "'");
        values.push_back(value);
    }
    return values;
}

namespace {

const char* command_name(Command c)
{
    switch (c) {
    case Command::symbol: return "symbol";
    case Command::pairs: return "pairs";
    case Command::ancestors: return "ancestors";
    case Command::expand: return "expand";
    case Command::factors: return "factors";
    case Command::drinfeld: return "drinfeld";
    case Command::tensor: return "tensor";
    case Command::batch: return "batch";
    }
    return "?";
}

struct RawOptions {
    std::string format = "text";
    std::optional<std::string> lambda1, lambda2, top, bottom;
    std::optional<Int> a1, a2, rank;
    Int max_weight = -1, max_charge = -1;
    int threads = 0;
};

void add_module_options(CLI::App* sub, RawOptions& raw)
{
    sub->add_option("--lambda1", raw.lambda1, "first partition, comma separated, any order");
    sub->add_option("--a1", raw.a1, "exponent of the first spectral parameter t^a1");
    sub->add_option("--lambda2", raw.lambda2, "second partition, comma separated, any order");
    sub->add_option("--a2", raw.a2, "exponent of the second spectral parameter t^a2");
}

void add_format_option(CLI::App* sub, RawOptions& raw)
{
    sub->add_option("--format", raw.format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
}

EvaluationModuleSpec module_spec(const std::optional<std::string>& lambda, const std::optional<Int>& a,
                                 const char* which)
{
    if (!lambda || !a)
        throw UsageError(std::string("--lambda") + which + " and --a" + which + " are required");
    const std::vector<Int> parts = parse_int_list(*lambda);
    return {make_partition(parts), *a};
}

} // namespace

Request parse_args(const std::vector<std::string>& args)
{
    CLI::App app{"Composition factors of induction products of two evaluation modules of the "
                 "affine Hecke algebra, via Lusztig symbols.",
                 "heckelr"};
    app.require_subcommand(1);
    RawOptions raw;

    struct Entry {
        Command command;
        const char* help;
        bool modules;
        bool rows;
        bool rank;
    };
    const Entry entries[] = {
        {Command::symbol, "symbol attached to the normalized pair", true, false, false},
        {Command::pairs, "psi-injection and pairs of a standard symbol", true, true, false},
        {Command::ancestors, "standard symbols whose swap family contains the symbol", true, true, false},
        {Command::expand, "v-graded expansion of the product of two quantum flag minors", true, false, false},
        {Command::factors, "composition factors of the induction product", true, false, false},
        {Command::drinfeld, "Drinfeld polynomials of both inputs and of every factor", true, false, true},
        {Command::tensor, "composition factors of the U_q(sl_N^) tensor product", true, false, true},
    };
    std::vector<std::pair<CLI::App*, Command>> subs;
    for (const Entry& e : entries) {
        CLI::App* sub = app.add_subcommand(command_name(e.command), e.help);
        if (e.modules)
            add_module_options(sub, raw);
        if (e.rows) {
            sub->add_option("--top", raw.top, "explicit top row, comma separated");
            sub->add_option("--bottom", raw.bottom, "explicit bottom row, comma separated");
        }
        if (e.rank)
            sub->add_option("--rank", raw.rank, "N of U_q(sl_N^)")->required();
        add_format_option(sub, raw);
        subs.emplace_back(sub, e.command);
    }
    CLI::App* batch = app.add_subcommand("batch", "JSON line per pair of charged partitions in a weight/charge box");
    batch->add_option("--max-weight", raw.max_weight, "bound on |lambda1| + |lambda2|")->required();
    batch->add_option("--max-charge", raw.max_charge, "bound on both charges")->required();
    batch->add_option("--threads", raw.threads, "worker threads, 0 for the OpenMP default");
    add_format_option(batch, raw);
    subs.emplace_back(batch, Command::batch);

    Request request;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        // Help for the innermost subcommand that was named, if any.
        const CLI::App* target = &app;
        for (auto& [sub, _] : subs)
            if (sub->parsed())
                target = sub;
        request.help = target->help();
        return request;
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    for (auto& [sub, command] : subs)
        if (sub->parsed())
            request.command = command;
    request.format = raw.format == "json" ? Format::json : Format::text;

    switch (request.command) {
    case Command::batch:
        if (raw.max_weight < 0 || raw.max_charge < 0)
            throw UsageError("--max-weight and --max-charge must be non-negative");
        request.max_weight = raw.max_weight;
        request.max_charge = raw.max_charge;
        request.threads = raw.threads;
        break;
    case Command::pairs:
    case Command::ancestors:
        if (raw.top || raw.bottom) {
            if (!raw.top || !raw.bottom)
                throw UsageError("--top and --bottom must be given together");
            if (raw.lambda1 || raw.lambda2 || raw.a1 || raw.a2)
                throw UsageError("give either --top/--bottom or the partition flags, not both");
            request.top = parse_int_list(*raw.top);
            request.bottom = parse_int_list(*raw.bottom);
            break;
        }
        [[fallthrough]];
    default:
        request.first = module_spec(raw.lambda1, raw.a1, "1");
        request.second = module_spec(raw.lambda2, raw.a2, "2");
        request.rank = raw.rank;
        break;
    }
    return request;
}

std::string render_multisegment(const Multisegment& m)
{
    if (m.empty())
        return "0";
    std::string out;
    for (const Segment& s : m.segments()) {
        if (!out.empty())
            out += "+";
        out += "[" + std::to_string(s.start()) + "," + std::to_string(s.end()) + "]";
    }
    return out;
}

std::string render_symbol(const Symbol& s)
{
    std::size_t width = 1;
    for (const BetaRow* row : {&s.top(), &s.bottom()})
        for (Int x : row->entries())
            width = std::max(width, std::to_string(x).size());
    auto line = [width](const BetaRow& row) {
        std::string out;
        for (Int x : row.entries()) {
            std::string cell = std::to_string(x);
            if (!out.empty())
                out += ' ';
            out += std::string(width - cell.size(), ' ') + cell;
        }
        return out;
    };
    return line(s.top()) + "\n" + line(s.bottom()) + "\n";
}

std::string render_expansion(const Expansion& e)
{
    std::string out = "v^" + std::to_string(e.offset) + " * ( ";
    for (std::size_t i = 0; i < e.terms.size(); ++i) {
        if (i > 0)
            out += " + ";
        out += "v^" + std::to_string(e.terms[i].swaps) + " b*(" + render_multisegment(e.terms[i].factor) + ")";
    }
    return out + " )";
}

namespace {

std::string render_partition(const Partition& p)
{
    // Conventional decreasing order for display.
    std::string out = "(";
    for (auto it = p.parts().rbegin(); it != p.parts().rend(); ++it) {
        if (it != p.parts().rbegin())
            out += ",";
        out += std::to_string(*it);
    }
    return out + ")";
}

std::string render_inputs(const NormalizedPair& pair)
{
    return "S(" + render_partition(pair.first.partition())
           + "; t^" + std::to_string(pair.first.charge()) + ") * S(" + render_partition(pair.second.partition())
           + "; t^" + std::to_string(pair.second.charge()) + ")\n";
}

std::string render_drinfeld(const Multisegment& source, const DrinfeldResult& d, Int rank)
{
    std::string out = "V(" + render_multisegment(source) + ")";
    if (const auto* zero = std::get_if<ZeroModule>(&d))
        return out + " = 0 at N = " + std::to_string(rank) + " (segment of length "
               + std::to_string(zero->longest) + " > N - 1)\n";
    const auto& data = std::get<DrinfeldData>(d);
    out += ", N = " + std::to_string(rank) + "\n";
    bool trivial_left = false;
    for (Int k = 1; k < rank; ++k) {
        const std::vector<Int>& roots = data.roots(k);
        if (roots.empty()) {
            trivial_left = true;
            continue;
        }
        out += "  P_" + std::to_string(k) + "(u) = ";
        for (Int e : roots)
            out += "(u - q^-" + std::to_string(e) + ")";
        out += "\n";
    }
    if (trivial_left)
        out += "  P_k(u) = 1 for every other k\n";
    return out;
}

Symbol request_symbol(const Request& r, std::optional<NormalizedPair>& pair)
{
    if (r.top)
        return Symbol(*r.top, *r.bottom);
    pair = normalize_inputs(*r.first, *r.second);
    return symbol_of(pair->first, pair->second);
}

json header(Command c)
{
    return {{"schema_version", json_io::schema_version}, {"command", command_name(c)}};
}

json drinfeld_entry(const Multisegment& m, Int rank)
{
    return {{"multisegment", json_io::to_json(m)}, {"drinfeld", json_io::to_json(drinfeld(m, rank), rank)}};
}

} // namespace

void run(const Request& r, std::ostream& out)
{
    if (r.help) {
        out << *r.help;
        return;
    }
    const bool as_json = r.format == Format::json;
    std::optional<NormalizedPair> pair;

    switch (r.command) {
    case Command::symbol: {
        const Symbol s = request_symbol(r, pair);
        if (as_json) {
            json doc = header(r.command);
            doc["symbol"] = json_io::to_json(s);
            doc["standard"] = is_standard(s);
            out << doc.dump() << "\n";
        } else {
            out << render_inputs(*pair) << render_symbol(s)
                << "standard: " << (is_standard(s) ? "yes" : "no") << "\n";
        }
        return;
    }
    case Command::pairs: {
        const Symbol s = request_symbol(r, pair);
        const PairStructure ps = pair_structure(s);
        if (as_json) {
            json doc = header(r.command);
            doc["symbol"] = json_io::to_json(s);
            doc.update(json_io::to_json(ps));
            out << doc.dump() << "\n";
        } else {
            out << render_symbol(s) << "psi:";
            for (Int j : s.bottom().entries())
                out << " " << j << "->" << ps.psi(j);
            out << "\npairs:";
            for (const Pair& p : ps.pairs)
                out << " (" << p.source << "," << p.target << ")";
            out << "\n";
        }
        return;
    }
    case Command::ancestors: {
        const Symbol s = request_symbol(r, pair);
        const std::vector<Ancestor> found = standard_ancestors(s);
        if (as_json) {
            json doc = header(r.command);
            doc["symbol"] = json_io::to_json(s);
            json list = json::array();
            for (const Ancestor& a : found)
                list.push_back({{"symbol", json_io::to_json(a.symbol)}, {"n", a.swaps},
                                {"multisegment", json_io::to_json(multisegment_of(a.symbol))}});
            doc["ancestors"] = list;
            out << doc.dump() << "\n";
        } else {
            out << render_symbol(s) << found.size() << " standard ancestor(s)\n";
            for (const Ancestor& a : found)
                out << "\nn = " << a.swaps << ", m = " << render_multisegment(multisegment_of(a.symbol)) << "\n"
                    << render_symbol(a.symbol);
        }
        return;
    }
    case Command::expand: {
        pair = normalize_inputs(*r.first, *r.second);
        const Expansion e = expansion(*pair);
        if (as_json) {
            json doc = header(r.command);
            doc["symbol"] = json_io::to_json(e.input);
            doc["expansion"] = json_io::to_json(e);
            out << doc.dump() << "\n";
        } else {
            out << render_inputs(*pair) << render_expansion(e) << "\n";
        }
        return;
    }
    case Command::factors: {
        pair = normalize_inputs(*r.first, *r.second);
        const std::vector<Multisegment> factors = composition_factors(*pair);
        if (as_json) {
            json doc = header(r.command);
            json list = json::array();
            for (const Multisegment& m : factors)
                list.push_back(json_io::to_json(m));
            doc["factors"] = list;
            out << doc.dump() << "\n";
        } else {
            out << render_inputs(*pair) << factors.size() << " composition factor(s), each of multiplicity one\n";
            for (const Multisegment& m : factors)
                out << "L(" << render_multisegment(m) << ")\n";
        }
        return;
    }
    case Command::drinfeld: {
        pair = normalize_inputs(*r.first, *r.second);
        const Int rank = *r.rank;
        const Multisegment inputs[] = {multisegment_of(pair->first), multisegment_of(pair->second)};
        const std::vector<Multisegment> factors = composition_factors(*pair);
        if (as_json) {
            json doc = header(r.command);
            doc["N"] = rank;
            doc["inputs"] = json::array();
            for (const Multisegment& m : inputs)
                doc["inputs"].push_back(drinfeld_entry(m, rank));
            doc["factors"] = json::array();
            for (const Multisegment& m : factors)
                doc["factors"].push_back(drinfeld_entry(m, rank));
            out << doc.dump() << "\n";
        } else {
            out << render_inputs(*pair) << "inputs:\n";
            for (const Multisegment& m : inputs)
                out << render_drinfeld(m, drinfeld(m, rank), rank);
            out << "factors:\n";
            for (const Multisegment& m : factors)
                out << render_drinfeld(m, drinfeld(m, rank), rank);
        }
        return;
    }
    case Command::tensor: {
        const Int rank = *r.rank;
        const std::vector<TensorFactor> factors = tensor_factors(*r.first, *r.second, rank);
        if (as_json) {
            json doc = header(r.command);
            doc["N"] = rank;
            doc["factors"] = json::array();
            for (const TensorFactor& f : factors)
                doc["factors"].push_back(drinfeld_entry(f.source, rank));
            out << doc.dump() << "\n";
        } else {
            pair = normalize_inputs(*r.first, *r.second);
            out << "V(" << render_multisegment(multisegment_of(pair->first)) << ") (x) V("
                << render_multisegment(multisegment_of(pair->second)) << ") at N = " << rank << ": "
                << factors.size() << " composition factor(s), each of multiplicity one\n";
            for (const TensorFactor& f : factors)
                out << render_drinfeld(f.source, f.polynomials, rank);
        }
        return;
    }
    case Command::batch: {
        const std::vector<NormalizedPair> pairs = sweep_pairs(r.max_weight, r.max_charge);
        for (const std::string& line : batch_records_parallel(pairs, r.threads))
            out << line << "\n";
        return;
    }
    }
}

namespace {

int report(std::ostream& err, bool as_json, const std::string& message, int code)
{
    if (as_json)
        err << json{{"error", message}, {"code", code}}.dump() << "\n";
    else
        err << "error: " << message << "\n";
    return code;
}

} // namespace

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    // Errors are reported as JSON whenever JSON output was asked for, even
    // when the rest of the command line is malformed.
    bool as_json = false;
    for (std::size_t i = 0; i + 1 < args.size(); ++i)
        if (args[i] == "--format" && args[i + 1] == "json")
            as_json = true;
    for (const std::string& a : args)
        if (a == "--format=json")
            as_json = true;

    try {
        const Request request = parse_args(args);
        run(request, out);
        return exit_ok;
    } catch (const UsageError& e) {
        if (!as_json)
            err << "usage: heckelr <symbol|pairs|ancestors|expand|factors|drinfeld|tensor|batch> [options]\n"
                   "run 'heckelr --help' for details\n";
        return report(err, as_json, e.what(), exit_usage);
    } catch (const DomainError& e) {
        return report(err, as_json, e.what(), exit_domain);
    } catch (const std::exception& e) {
        return report(err, as_json, e.what(), exit_integrity);
    }
}

} // namespace heckelr::cli
