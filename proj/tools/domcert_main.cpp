// Command line front end. Everything goes through the public C interface;
// the engine's C++ headers are deliberately not included here.
#include <CLI11.hpp>
#include <domcert.h>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

std::string take(char* text) {
    std::string out = text ? text : "";
    dc_string_free(text);
    return out;
}

int fail(dc_status status) {
    std::cerr << "error: " << dc_last_error() << "\n";
    return int(status);
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path);
    out << text;
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    return 0;
}

int answer(dc_status status) {
    if (status == DC_OK) {
        std::cout << "true\n";
        return 0;
    }
    if (status == DC_FALSE) {
        std::cout << "false\n";
        return 1;
    }
    return fail(status);
}

bool read_input(const std::string& path, std::string& text) {
    std::stringstream buffer;
    if (path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "error: cannot open " << path << "\n";
            return false;
        }
        buffer << in.rdbuf();
    }
    text = buffer.str();
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact partition dominance, tensor powers, and containment certificates"};
    app.require_subcommand(1);

    std::string x, y, base, target, dominated, composition, file, out_path;
    std::int64_t power = 1;
    std::uint64_t support_cap = 0;
    int rank = 0, column = 0, jobs = 0;
    bool scaled = false, explain = false, support_only = false, deep = false;

    CLI::App* dominance = app.add_subcommand("dominance", "Compare two partitions in the dominance order");
    dominance->add_option("x", x, "left partition, e.g. [2,1,0]")->required();
    dominance->add_option("y", y, "right partition")->required();
    dominance->add_flag("--scaled", scaled, "use the weight-scaled order");
    dominance->add_flag("--explain", explain, "print why the order fails");

    CLI::App* tensor = app.add_subcommand("tensor", "Expand a tensor power");
    tensor->add_option("base", base, "base partition")->required();
    tensor->add_option("--power", power, "tensor power")->required();
    tensor->add_option("--contains", target, "only test whether this partition occurs");
    tensor->add_flag("--support-only", support_only, "skip multiplicities");
    tensor->add_option("--support-cap", support_cap, "largest support size to expand");
    tensor->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* vertices = app.add_subcommand("cone-vertices", "List the dominance cone generators");
    vertices->add_option("base", base, "base partition")->required();
    vertices->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* sigma = app.add_subcommand("sigma", "List the fundamental domain of the dominance cone");
    sigma->add_option("base", base, "base partition")->required();
    sigma->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* decompose = app.add_subcommand("decompose", "Write a cone member as remainder plus generators");
    decompose->add_option("base", base, "base partition")->required();
    decompose->add_option("target", target, "cone member to decompose")->required();
    decompose->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* certify = app.add_subcommand("certify", "Construct a containment certificate");
    certify->require_subcommand(1);
    CLI::App* wedge = certify->add_subcommand("wedge", "column powers: a column to its tensor powers");
    wedge->add_option("--rank", rank, "number of rows")->required();
    wedge->add_option("--column", column, "column height")->required();
    wedge->add_option("--power", power, "tensor power")->required();
    wedge->add_option("--out", out_path, "write JSON here instead of stdout");
    CLI::App* det = certify->add_subcommand("det", "rectangular target: base to the scaled determinant");
    det->add_option("base", base, "base partition")->required();
    det->add_option("--out", out_path, "write JSON here instead of stdout");
    CLI::App* vertex = certify->add_subcommand("vertex", "cone generator at the shared scale");
    vertex->add_option("base", base, "base partition")->required();
    vertex->add_option("composition", composition, "block composition, e.g. (1,2)")->required();
    vertex->add_option("--out", out_path, "write JSON here instead of stdout");
    CLI::App* dom_cert = certify->add_subcommand("dominance", "full certificate for a dominated power");
    dom_cert->add_option("base", base, "dominating partition")->required();
    dom_cert->add_option("dominated", dominated, "dominated partition")->required();
    dom_cert->add_option("--power", power, "tensor power of the dominated partition")->required();
    dom_cert->add_option("--support-cap", support_cap, "largest support size to expand");
    dom_cert->add_option("--out", out_path, "write JSON here instead of stdout");

    CLI::App* verify = app.add_subcommand("verify", "Check a certificate document");
    verify->add_option("file", file, "JSON document, or - for stdin")->required();
    verify->add_flag("--deep", deep, "re-check composite steps against the expansion oracle");
    verify->add_option("--support-cap", support_cap, "largest support size to expand");

    CLI::App* selftest = app.add_subcommand("selftest", "Run the internal consistency checks");
    selftest->add_option("--jobs", jobs, "worker threads, 0 for all cores");
    selftest->add_option("--out", out_path, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (*dominance) {
        dc_status status = dc_dominates(x.c_str(), y.c_str(), scaled ? 1 : 0);
        if (status == DC_FALSE && explain) {
            char* text = nullptr;
            if (dc_dominance_diagnostic(x.c_str(), y.c_str(), scaled ? 1 : 0, &text) == DC_OK)
                std::cerr << take(text) << "\n";
        }
        return answer(status);
    }
    if (*tensor) {
        if (!target.empty())
            return answer(dc_contains_in_power(base.c_str(), target.c_str(), power, support_cap));
        char* text = nullptr;
        dc_status status = dc_tensor_power(base.c_str(), power, support_only ? 0 : 1, support_cap, &text);
        if (status != DC_OK) return fail(status);
        return emit(take(text), out_path);
    }
    if (*vertices || *sigma || *decompose) {
        dc_cone* cone = nullptr;
        dc_status status = dc_cone_create(base.c_str(), &cone);
        if (status != DC_OK) return fail(status);
        char* text = nullptr;
        if (*vertices) status = dc_cone_vertices(cone, &text);
        if (*sigma) status = dc_cone_sigma(cone, &text);
        if (*decompose) status = dc_cone_decompose(cone, target.c_str(), &text);
        dc_cone_free(cone);
        if (status != DC_OK) return fail(status);
        return emit(take(text), out_path);
    }
    if (*certify) {
        char* text = nullptr;
        dc_status status = DC_ERROR_INTERNAL;
        if (*wedge) status = dc_certify_wedge(rank, column, power, &text);
        if (*det) status = dc_certify_det(base.c_str(), &text);
        if (*vertex) status = dc_certify_vertex(base.c_str(), composition.c_str(), &text);
        if (*dom_cert)
            status = dc_certify_dominance(base.c_str(), dominated.c_str(), power, support_cap, &text);
        if (status != DC_OK) return fail(status);
        return emit(take(text), out_path);
    }
    if (*verify) {
        std::string document;
        if (!read_input(file, document)) return 2;
        dc_document* doc = nullptr;
        dc_status status = dc_document_parse(document.c_str(), &doc);
        if (status != DC_OK) return fail(status);
        char* reason = nullptr;
        status = dc_document_verify(doc, deep ? 1 : 0, support_cap, &reason);
        std::string why = take(reason);
        dc_document_free(doc);
        if (status == DC_OK) {
            std::cout << "accepted\n";
            return 0;
        }
        if (status == DC_FALSE) {
            std::cout << "rejected: " << why << "\n";
            return 1;
        }
        return fail(status);
    }
    if (*selftest) {
        char* text = nullptr;
        dc_status status = dc_selftest(jobs, &text);
        std::string report = take(text);
        if (status != DC_OK && status != DC_FALSE) return fail(status);
        int written = emit(report, out_path);
        if (written != 0) return written;
        return status == DC_OK ? 0 : 1;
    }
    return 2;
}
