#include <lvcert/potts/coeff_io.hpp>

#include <lvcert/algebra/poly_io.hpp>
#include <lvcert/potts/partition.hpp>

#include <fstream>
#include <sstream>

namespace lvcert {

namespace {

std::string header_field(const std::string& header, const std::string& key)
{
    auto pos = header.find(" " + key + "=");
    if (pos == std::string::npos)
        throw CoeffFileError("coefficient header lacks " + key);
    auto start = pos + key.size() + 2;
    auto end = header.find(' ', start);
    return header.substr(start, end == std::string::npos ? std::string::npos : end - start);
}

}  // namespace

void write_coefficients(std::ostream& out, const CoeffFile& file)
{
    auto parts = partitions_of(file.d);
    out << "LVCOEF1 case=" << file.spec.name() << " d=" << file.d << " count=" << file.records.size()
        << " catalogue=" << file.catalogue_hash << '\n';
    for (const auto& rec : file.records) {
        out << "view " << rec.view_id << '\n';
        out << "[Ztilde]\n";
        write_poly(out, rec.ztilde);
        out << "[Nc]\n";
        write_poly(out, rec.n_c);
        for (std::size_t s = 0; s < parts.size(); ++s) {
            out << "[gamma " << partition_label(parts[s]) << "]\n";
            write_poly(out, rec.n_gamma[s]);
        }
    }
}

void save_coefficients(const std::string& path, const CoeffFile& file)
{
    std::ofstream out(path);
    if (!out)
        throw CoeffFileError("cannot write coefficients: " + path);
    write_coefficients(out, file);
    if (!out)
        throw CoeffFileError("error writing coefficients: " + path);
}

CoeffFile read_coefficients(std::istream& in)
{
    std::string header;
    if (!std::getline(in, header) || header.rfind("LVCOEF1", 0) != 0)
        throw CoeffFileError("not a coefficient file (missing LVCOEF1 header)");
    CoeffFile file;
    file.spec = CaseSpec::parse(header_field(header, "case"));
    file.d = std::stoi(header_field(header, "d"));
    auto count = std::stoul(header_field(header, "count"));
    file.catalogue_hash = header_field(header, "catalogue");
    auto parts = partitions_of(file.d);

    std::string line;
    CoeffRecord* rec = nullptr;
    BiPoly* target = nullptr;
    std::string block;
    auto flush = [&]() {
        if (target)
            *target = parse_poly(block);
        block.clear();
        target = nullptr;
    };
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (line.rfind("view ", 0) == 0) {
            flush();
            file.records.emplace_back();
            rec = &file.records.back();
            rec->view_id = std::stoi(line.substr(5));
            rec->d = file.d;
            rec->n_gamma.resize(parts.size());
        }
        else if (line.front() == '[') {
            flush();
            if (!rec)
                throw CoeffFileError("polynomial block before any view");
            if (line == "[Ztilde]")
                target = &rec->ztilde;
            else if (line == "[Nc]")
                target = &rec->n_c;
            else if (line.rfind("[gamma ", 0) == 0 && line.back() == ']') {
                int s = partition_index(parts, parse_partition(line.substr(7, line.size() - 8)));
                if (s < 0)
                    throw CoeffFileError("unknown partition in " + line);
                target = &rec->n_gamma[s];
            }
            else
                throw CoeffFileError("unknown block " + line);
        }
        else {
            if (!target)
                throw CoeffFileError("stray line: " + line);
            block += line;
            block += '\n';
        }
    }
    flush();
    if (file.records.size() != count)
        throw CoeffFileError("coefficient count mismatch");
    return file;
}

CoeffFile load_coefficients(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw CoeffFileError("cannot open coefficients: " + path);
    return read_coefficients(in);
}

}  // namespace lvcert
