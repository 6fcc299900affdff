#include <lvcert/localview/catalogue_io.hpp>

#include <lvcert/util/sha256.hpp>

#include <fstream>
#include <sstream>

namespace lvcert {

namespace {

std::vector<VertexPair> parse_inner(const std::string& text)
{
    std::vector<VertexPair> edges;
    std::istringstream in(text);
    std::string token;
    while (in >> token) {
        auto dash = token.find('-');
        if (dash == std::string::npos)
            throw CatalogueError("bad inner edge token: " + token);
        edges.emplace_back(std::stoi(token.substr(0, dash)), std::stoi(token.substr(dash + 1)));
    }
    return edges;
}

std::vector<std::vector<int>> parse_mults(const std::string& text)
{
    if (text.size() < 2 || text.front() != '[' || text.back() != ']')
        throw CatalogueError("bad mults field: " + text);
    std::vector<std::vector<int>> out(1);
    std::string number;
    auto flush = [&]() {
        if (!number.empty()) {
            out.back().push_back(std::stoi(number));
            number.clear();
        }
    };
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
        char c = text[i];
        if (c == '|') {
            flush();
            out.emplace_back();
        }
        else if (c == ',') {
            flush();
        }
        else if (c >= '0' && c <= '9') {
            number += c;
        }
        else {
            throw CatalogueError("bad character in mults: " + text);
        }
    }
    flush();
    return out;
}

std::string field_value(const std::string& header, const std::string& key)
{
    auto pos = header.find(key + "=");
    if (pos == std::string::npos)
        throw CatalogueError("catalogue header lacks " + key);
    auto start = pos + key.size() + 1;
    auto end = header.find(' ', start);
    return header.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

std::string catalogue_body(const Catalogue& cat)
{
    std::string body;
    for (const auto& view : cat.views) {
        body += "\ninner: " + view.inner_text() + "\n";
        body += "mults: " + view.mults_text() + "\n";
    }
    return body;
}

std::string catalogue_hash(const Catalogue& cat) { return sha256_hex(catalogue_body(cat)); }

void write_catalogue(std::ostream& out, const Catalogue& cat)
{
    out << "LVC1 d=" << cat.d << " count=" << cat.views.size() << " hash=" << cat.hash << '\n'
        << catalogue_body(cat);
}

void save_catalogue(const std::string& path, const Catalogue& cat)
{
    std::ofstream out(path);
    if (!out)
        throw CatalogueError("cannot write catalogue: " + path);
    write_catalogue(out, cat);
    if (!out)
        throw CatalogueError("error writing catalogue: " + path);
}

Catalogue read_catalogue(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header) || header.rfind("LVC1 ", 0) != 0)
        throw CatalogueError("not a catalogue file (missing LVC1 header)");
    Catalogue cat;
    cat.d = std::stoi(field_value(header, "d"));
    auto count = std::stoul(field_value(header, "count"));
    auto stored_hash = field_value(header, "hash");

    std::ostringstream rest;
    rest << in.rdbuf();
    std::string body = rest.str();
    if (sha256_hex(body) != stored_hash)
        throw CatalogueError("catalogue hash mismatch: file content does not match its header");

    std::istringstream lines(body);
    std::string line, inner;
    bool have_inner = false;
    while (std::getline(lines, line)) {
        if (line.empty())
            continue;
        if (line.rfind("inner:", 0) == 0) {
            inner = line.size() > 7 ? line.substr(7) : std::string{};
            have_inner = true;
        }
        else if (line.rfind("mults: ", 0) == 0 && have_inner) {
            auto edges = parse_inner(inner);
            auto mults = parse_mults(line.substr(7));
            auto view = make_local_view(cat.d, edges, mults);
            if (view.inner_text() != inner || view.mults_text() != line.substr(7))
                throw CatalogueError("catalogue record is not in canonical form: " + line);
            cat.views.push_back(std::move(view));
            have_inner = false;
        }
        else {
            throw CatalogueError("unexpected catalogue line: " + line);
        }
    }
    if (cat.views.size() != count)
        throw CatalogueError("catalogue count mismatch");
    cat.hash = stored_hash;
    return cat;
}

Catalogue load_catalogue(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CatalogueError("cannot open catalogue: " + path);
    return read_catalogue(in);
}

}  // namespace lvcert
