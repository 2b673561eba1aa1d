#include "ntoric/ntoric.h"

#include "ntoric/report.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

using namespace ntoric;

struct ntc_diagram {
    InputSpec spec;
};

namespace {

char* dup_string(const std::string& s)
{
    char* p = (char*)std::malloc(s.size() + 1);
    if (p)
        std::memcpy(p, s.c_str(), s.size() + 1);
    return p;
}

int run(const ntc_diagram* d, char** out, char** err, std::string (*f)(const InputSpec&))
{
    if (out)
        *out = nullptr;
    if (err)
        *err = nullptr;
    if (!d) {
        if (err)
            *err = dup_string("null diagram handle");
        return NTC_EINPUT;
    }
    try {
        std::string payload = f(d->spec);
        if (out)
            *out = dup_string(payload);
        return NTC_OK;
    } catch (const input_error& e) {
        if (err)
            *err = dup_string(e.what());
        return NTC_EINPUT;
    } catch (const hypothesis_error& e) {
        if (err)
            *err = dup_string(e.what());
        return NTC_EHYPOTHESIS;
    } catch (const cap_error& e) {
        if (err)
            *err = dup_string(e.what());
        return NTC_ECAP;
    } catch (const std::exception& e) {
        if (err)
            *err = dup_string(e.what());
        return NTC_EINTERNAL;
    }
}

} // namespace

extern "C" {

ntc_diagram* ntc_diagram_parse(const char* json_text, char** err)
{
    if (err)
        *err = nullptr;
    if (!json_text) {
        if (err)
            *err = dup_string("null input text");
        return nullptr;
    }
    try {
        auto* d = new ntc_diagram{parse_input(json_text)};
        return d;
    } catch (const std::exception& e) {
        if (err)
            *err = dup_string(e.what());
        return nullptr;
    }
}

void ntc_diagram_free(ntc_diagram* d) { delete d; }

void ntc_set_delta_shell_cap(ntc_diagram* d, int cap)
{
    if (d)
        d->spec.delta_shell_cap = cap;
}

void ntc_set_root(ntc_diagram* d, int node_id)
{
    if (d)
        d->spec.root = node_id;
}

int ntc_input_json(const ntc_diagram* d, char** out, char** err)
{
    return run(d, out, err, serialize_input);
}

int ntc_fan_json(const ntc_diagram* d, char** out, char** err) { return run(d, out, err, cmd_fan); }

int ntc_graph_json(const ntc_diagram* d, char** out, char** err)
{
    return run(d, out, err, cmd_graph);
}

int ntc_invariants_json(const ntc_diagram* d, char** out, char** err)
{
    return run(d, out, err, cmd_invariants);
}

int ntc_seq_json(const ntc_diagram* d, char** out, char** err) { return run(d, out, err, cmd_seq); }

int ntc_reduce_json(const ntc_diagram* d, char** out, char** err)
{
    return run(d, out, err, cmd_reduce);
}

int ntc_report_json(const ntc_diagram* d, char** out, char** err)
{
    return run(d, out, err, cmd_report);
}

int ntc_graph_dot(const ntc_diagram* d, char** out, char** err)
{
    return run(d, out, err, cmd_dot);
}

void ntc_free(char* p) { std::free(p); }

const char* ntc_version(void) { return "ntoric 0.1.0"; }

} // extern "C"
