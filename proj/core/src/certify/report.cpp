#include <lvcert/certify/report.hpp>

#include <lvcert/algebra/poly_io.hpp>

#include <chrono>
#include <ctime>
#include <ostream>
#include <sstream>

namespace lvcert {

namespace {

std::string substitution(const CaseSpec& spec)
{
    switch (spec.kind) {
    case CaseKind::MinQ5:
        return "e^beta=1+t q=5";
    case CaseKind::MinQGe6:
        return "e^beta=1+t q=r+6";
    case CaseKind::MaxQGe5:
        return "e^beta=1+t q=r+5";
    }
    return "";
}

std::string implications(const Certificate& cert)
{
    if (!cert.pass)
        return "  none: the certificate did not pass\n";
    switch (cert.spec.kind) {
    case CaseKind::MinQ5:
        return "  For q = 5, every 4-regular graph G and every beta > 0: U_G(beta) >= U_K44(beta),\n"
               "  with equality only when every component of G is K44. Integrating in beta gives\n"
               "  the matching bound on the free energy and, as beta grows, on the number of\n"
               "  proper 5-colourings per vertex.\n";
    case CaseKind::MinQGe6:
        return "  For every q >= 6, every 4-regular graph G and every beta > 0: U_G(beta) >= U_K44(beta),\n"
               "  with equality only when every component of G is K44. Integrating in beta gives\n"
               "  the matching bound on the free energy and, as beta grows, on the number of\n"
               "  proper q-colourings per vertex.\n";
    case CaseKind::MaxQGe5:
        return "  For every q >= 5, every 4-regular graph G and every beta > 0: U_G(beta) <= U_K5(beta),\n"
               "  with equality only when every component of G is K5.\n";
    }
    return "";
}

}  // namespace

std::string certificate_body(const Certificate& cert, const Catalogue& catalogue)
{
    std::ostringstream out;
    out << "meta\n";
    out << "  case=" << cert.spec.name() << '\n';
    out << "  substitution=" << substitution(cert.spec) << '\n';
    out << "  d=" << catalogue.d << '\n';
    out << "  catalogue=" << cert.catalogue_hash << '\n';
    out << "  views=" << cert.verdicts.size() << '\n';
    out << "  constraints=";
    for (std::size_t i = 0; i < cert.constraints.size(); ++i)
        out << (i ? "," : "") << cert.constraints[i];
    out << '\n';
    out << "  magic=" << cert.magic_expression << '\n';

    out << "dual\n";
    out << "  consistent=" << (cert.dual_consistent ? "true" : "false") << '\n';
    for (const auto& [name, value] : cert.dual)
        out << "  " << name << " = (" << to_infix(value.num()) << ") / (" << to_infix(value.den()) << ")\n";

    out << "support\n";
    for (int id : cert.support) {
        const auto& view = catalogue.views.at(id);
        out << "  view=" << id << " inner=[" << view.inner_text() << "] mults=" << view.mults_text() << '\n';
    }

    out << "verdicts\n";
    int raw = 0, magic = 0;
    for (const auto& v : cert.verdicts) {
        out << "view=" << v.view_id << " status=" << status_name(v.status);
        if (v.witness)
            out << " witness=" << to_string(*v.witness);
        out << '\n';
        if (v.method == "raw")
            ++raw;
        else if (v.method == "magic")
            ++magic;
    }
    for (const auto& v : cert.verdicts)
        if (v.status == VerdictStatus::Fail)
            out << "# failure view=" << v.view_id << ": " << v.detail << '\n';

    out << "summary pass=" << (cert.pass ? "true" : "false") << " zeros=" << cert.zeros
        << " positives=" << cert.positives << " failures=" << cert.failures << " certified_raw=" << raw
        << " certified_magic=" << magic << '\n';
    out << "implications\n" << implications(cert);
    return out.str();
}

void emit_certificate(std::ostream& out, const Certificate& cert, const Catalogue& catalogue,
                      std::string_view generated_at)
{
    if (!generated_at.empty())
        out << "# generated " << generated_at << '\n';
    out << certificate_body(cert, catalogue);
}

std::string utc_timestamp()
{
    std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buf;
}

}  // namespace lvcert
