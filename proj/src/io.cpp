#include "calg/io.hpp"

#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace calg::io {

namespace {

[[noreturn]] void fail(const std::string &where, const std::string &msg)
{
	throw InputError(fmt::format("at {}: {}", where.empty() ? "/" : where, msg));
}

// Re-throws library errors raised while building a node with its location.
template <class F>
auto located(const std::string &where, F &&f) -> decltype(f())
{
	try
	{
		return f();
	}
	catch (const InputError &e)
	{
		fail(where, e.what());
	}
	catch (const ArithmeticError &e)
	{
		fail(where, e.what());
	}
}

const json &need(const json &j, const char *key, const std::string &where)
{
	if (!j.is_object())
		fail(where, "expected an object");
	auto it = j.find(key);
	if (it == j.end())
		fail(where, fmt::format("missing field \"{}\"", key));
	return *it;
}

const json &need_array(const json &j, const std::string &where)
{
	if (!j.is_array())
		fail(where, "expected an array");
	return j;
}

std::string need_string(const json &j, const std::string &where)
{
	if (!j.is_string())
		fail(where, "expected a string");
	return j.get<std::string>();
}

std::int64_t need_int(const json &j, const std::string &where)
{
	if (!j.is_number_integer())
		fail(where, "expected an integer");
	return j.get<std::int64_t>();
}

std::size_t need_index(const json &j, const std::string &where)
{
	std::int64_t v = need_int(j, where);
	if (v < 0)
		fail(where, "negative index");
	return static_cast<std::size_t>(v);
}

Scalar scalar_from(const json &j, const Field &f, const std::string &where)
{
	if (j.is_number_integer())
		return f.from_int(j.get<std::int64_t>());
	return located(where, [&] { return f.parse(need_string(j, where)); });
}

json strings(const std::vector<std::vector<std::string>> &m)
{
	json out = json::array();
	for (const auto &row : m)
		out.push_back(row);
	return out;
}

std::vector<std::vector<std::string>> string_matrix(const json &j, const std::string &where)
{
	std::vector<std::vector<std::string>> out;
	for (std::size_t r = 0; r < need_array(j, where).size(); ++r)
	{
		std::string rw = fmt::format("{}/{}", where, r);
		std::vector<std::string> row;
		for (std::size_t c = 0; c < need_array(j[r], rw).size(); ++c)
			row.push_back(need_string(j[r][c], fmt::format("{}/{}", rw, c)));
		out.push_back(std::move(row));
	}
	return out;
}

json vector_to_json(const Vector &v)
{
	json out = json::array();
	for (const auto &c : v.coefficients())
		out.push_back(c.str());
	return out;
}

Vector vector_from_json(const json &j, const Field &f, const std::string &where)
{
	Vector v(f, need_array(j, where).size());
	for (std::size_t i = 0; i < j.size(); ++i)
		v[i] = scalar_from(j[i], f, fmt::format("{}/{}", where, i));
	return v;
}

json provenance_to_json(const ProvenanceEntry &p)
{
	json out;
	out["construction"] = p.construction;
	out["inputs"] = p.inputs;
	out["scalars"] = p.scalars;
	out["operator_matrix"] = strings(p.operator_matrix);
	out["claimed_class"] = p.claimed_class;
	out["verified"] = p.verified;
	return out;
}

ProvenanceEntry provenance_from_json(const json &j, const std::string &where)
{
	ProvenanceEntry p;
	p.construction = need_string(need(j, "construction", where), where + "/construction");
	if (auto it = j.find("inputs"); it != j.end())
		for (std::size_t i = 0; i < need_array(*it, where + "/inputs").size(); ++i)
			p.inputs.push_back(need_string((*it)[i], fmt::format("{}/inputs/{}", where, i)));
	if (auto it = j.find("scalars"); it != j.end())
	{
		if (!it->is_object())
			fail(where + "/scalars", "expected an object");
		for (const auto &[k, v] : it->items())
			p.scalars[k] = need_string(v, where + "/scalars/" + k);
	}
	if (auto it = j.find("operator_matrix"); it != j.end())
		p.operator_matrix = string_matrix(*it, where + "/operator_matrix");
	if (auto it = j.find("claimed_class"); it != j.end())
		p.claimed_class = need_string(*it, where + "/claimed_class");
	if (auto it = j.find("verified"); it != j.end())
	{
		if (!it->is_boolean())
			fail(where + "/verified", "expected a boolean");
		p.verified = it->get<bool>();
	}
	return p;
}

std::vector<GradedSpace> slot_spaces(const std::string &signature, const GradedSpace &a, const GradedSpace &m)
{
	std::vector<GradedSpace> out;
	for (char c : signature.substr(0, signature.find('-')))
		out.push_back(c == 'A' ? a : m);
	return out;
}

} // namespace

json field_to_json(const Field &f)
{
	if (f.is_prime())
		return json{{"kind", "Fp"}, {"p", f.modulus()}};
	return json{{"kind", "Q"}};
}

Field field_from_json(const json &j, const std::string &where)
{
	std::string kind = need_string(need(j, "kind", where), where + "/kind");
	if (kind == "Q")
		return Field::rationals();
	if (kind != "Fp")
		fail(where + "/kind", fmt::format("unknown field kind \"{}\"", kind));
	std::int64_t p = need_int(need(j, "p", where), where + "/p");
	if (p < 2)
		fail(where + "/p", fmt::format("{} is not prime", p));
	return located(where + "/p", [&] { return Field::prime(static_cast<std::uint64_t>(p)); });
}

json space_to_json(const GradedSpace &s)
{
	json basis = json::array();
	for (std::size_t i = 0; i < s.dim(); ++i)
		basis.push_back(json{{"name", s.names()[i]}, {"degree", s.degree(i).components}});
	return basis;
}

GradedSpace space_from_json(const json &j, const GradingGroup &g, const std::string &where)
{
	std::vector<std::string> names;
	std::vector<Degree> degrees;
	for (std::size_t i = 0; i < need_array(j, where).size(); ++i)
	{
		std::string w = fmt::format("{}/{}", where, i);
		names.push_back(need_string(need(j[i], "name", w), w + "/name"));
		Degree d;
		const json &dj = need_array(need(j[i], "degree", w), w + "/degree");
		for (std::size_t c = 0; c < dj.size(); ++c)
			d.components.push_back(static_cast<int>(need_int(dj[c], fmt::format("{}/degree/{}", w, c))));
		if (d.components.size() != g.rank() || !g.contains(d))
			fail(w + "/degree", fmt::format("degree {} is not a reduced element of the grading group", d.str()));
		degrees.push_back(std::move(d));
	}
	return located(where, [&] { return GradedSpace(g, std::move(names), std::move(degrees)); });
}

json op_to_json(const MultiOp &op)
{
	json entries = json::array();
	for (const auto &e : op.entries())
	{
		json row = json::array();
		for (auto i : e.args)
			row.push_back(i);
		row.push_back(e.out);
		row.push_back(e.coefficient.str());
		entries.push_back(std::move(row));
	}
	return json{{"arity", op.arity()}, {"entries", std::move(entries)}};
}

MultiOp op_from_json(const json &j, std::vector<GradedSpace> inputs, const GradedSpace &output, const Field &f,
                     const std::string &where)
{
	std::size_t arity = inputs.size();
	MultiOp op(std::move(inputs), output, f);
	const json &entries = need_array(need(j, "entries", where), where + "/entries");
	for (std::size_t n = 0; n < entries.size(); ++n)
	{
		std::string w = fmt::format("{}/entries/{}", where, n);
		const json &e = need_array(entries[n], w);
		if (e.size() != arity + 2)
			fail(w, fmt::format("expected {} indices and a coefficient, got {} items", arity + 1, e.size()));
		std::vector<std::size_t> args;
		for (std::size_t k = 0; k < arity; ++k)
			args.push_back(need_index(e[k], fmt::format("{}/{}", w, k)));
		std::size_t out = need_index(e[arity], fmt::format("{}/{}", w, arity));
		Scalar c = scalar_from(e[arity + 1], f, fmt::format("{}/{}", w, arity + 1));
		located(w, [&] { op.add(args, out, c); });
	}
	return op;
}

json algebra_to_json(const AlgebraPresentation &a)
{
	json out;
	if (!a.label.empty())
		out["label"] = a.label;
	out["group"] = a.space().group().cyclic_orders();
	out["field"] = field_to_json(a.field());
	json bich = json::array();
	for (const auto &row : a.eps().generator_matrix())
	{
		json r = json::array();
		for (const auto &c : row)
			r.push_back(c.str());
		bich.push_back(std::move(r));
	}
	out["bicharacter"] = std::move(bich);
	out["basis"] = space_to_json(a.space());
	json ops = json::object();
	for (const auto &[name, op] : a.ops())
		ops[name] = op_to_json(op);
	out["ops"] = std::move(ops);
	if (a.declared_class)
		out["declared_class"] = *a.declared_class;
	json prov = json::array();
	for (const auto &p : a.provenance)
		prov.push_back(provenance_to_json(p));
	out["provenance"] = std::move(prov);
	return out;
}

AlgebraPresentation algebra_from_json(const json &j)
{
	if (!j.is_object())
		fail("", "expected an object");
	std::vector<int> orders;
	if (auto it = j.find("group"); it != j.end())
		for (std::size_t i = 0; i < need_array(*it, "/group").size(); ++i)
			orders.push_back(static_cast<int>(need_int((*it)[i], fmt::format("/group/{}", i))));
	GradingGroup g = located("/group", [&] { return GradingGroup(orders); });
	Field f = field_from_json(need(j, "field", ""), "/field");

	Bicharacter eps = Bicharacter::trivial(g, f);
	if (auto it = j.find("bicharacter"); it != j.end())
	{
		std::vector<std::vector<Scalar>> m;
		for (std::size_t r = 0; r < need_array(*it, "/bicharacter").size(); ++r)
		{
			std::string w = fmt::format("/bicharacter/{}", r);
			std::vector<Scalar> row;
			for (std::size_t c = 0; c < need_array((*it)[r], w).size(); ++c)
				row.push_back(scalar_from((*it)[r][c], f, fmt::format("{}/{}", w, c)));
			m.push_back(std::move(row));
		}
		eps = located("/bicharacter", [&] { return Bicharacter(g, f, std::move(m)); });
	}

	GradedSpace s = space_from_json(need(j, "basis", ""), g, "/basis");
	AlgebraPresentation a(s, eps);
	if (auto it = j.find("ops"); it != j.end())
	{
		if (!it->is_object())
			fail("/ops", "expected an object");
		for (const auto &[name, oj] : it->items())
		{
			std::string w = "/ops/" + name;
			std::int64_t arity = need_int(need(oj, "arity", w), w + "/arity");
			if (arity < 1 || arity > 3)
				fail(w + "/arity", fmt::format("unsupported arity {}", arity));
			a.set_op(name, op_from_json(oj, std::vector<GradedSpace>(arity, s), s, f, w));
		}
	}
	if (auto it = j.find("label"); it != j.end())
		a.label = need_string(*it, "/label");
	if (auto it = j.find("declared_class"); it != j.end() && !it->is_null())
		a.declared_class = need_string(*it, "/declared_class");
	if (auto it = j.find("provenance"); it != j.end())
		for (std::size_t i = 0; i < need_array(*it, "/provenance").size(); ++i)
			a.provenance.push_back(provenance_from_json((*it)[i], fmt::format("/provenance/{}", i)));
	return a;
}

json matrix_to_json(const LinearMap &m)
{
	return strings(m.str_matrix());
}

LinearMap matrix_from_json(const json &j, const GradedSpace &space, const Field &f)
{
	std::vector<std::vector<Scalar>> m;
	for (std::size_t r = 0; r < need_array(j, "").size(); ++r)
	{
		std::string w = fmt::format("/{}", r);
		std::vector<Scalar> row;
		for (std::size_t c = 0; c < need_array(j[r], w).size(); ++c)
			row.push_back(scalar_from(j[r][c], f, fmt::format("{}/{}", w, c)));
		m.push_back(std::move(row));
	}
	return located("", [&] { return LinearMap(space, space, f, std::move(m)); });
}

json report_to_json(const AxiomReport &r)
{
	json out;
	out["subject"] = r.subject;
	out["passed"] = r.passed();
	out["tuples_checked"] = r.tuples_checked;
	out["failure_cap"] = r.failure_cap;
	if (!r.failures.empty())
		out["field"] = field_to_json(r.failures.front().lhs.field());
	json axioms = json::array();
	for (const auto &a : r.axioms)
		axioms.push_back(json{{"id", a.id}, {"tuples", a.tuples}, {"failures", a.failures}, {"passed", a.passed()}});
	out["axioms"] = std::move(axioms);
	json failures = json::array();
	for (const auto &f : r.failures)
	{
		failures.push_back(json{{"axiom", f.axiom},
		                        {"witness", f.witness},
		                        {"labels", f.labels},
		                        {"lhs", vector_to_json(f.lhs)},
		                        {"rhs", vector_to_json(f.rhs)}});
	}
	out["failures"] = std::move(failures);
	return out;
}

AxiomReport report_from_json(const json &j)
{
	AxiomReport r;
	r.subject = need_string(need(j, "subject", ""), "/subject");
	r.tuples_checked = need_index(need(j, "tuples_checked", ""), "/tuples_checked");
	r.failure_cap = need_index(need(j, "failure_cap", ""), "/failure_cap");
	const json &axioms = need_array(need(j, "axioms", ""), "/axioms");
	for (std::size_t i = 0; i < axioms.size(); ++i)
	{
		std::string w = fmt::format("/axioms/{}", i);
		r.axioms.push_back({need_string(need(axioms[i], "id", w), w + "/id"),
		                    need_index(need(axioms[i], "tuples", w), w + "/tuples"),
		                    need_index(need(axioms[i], "failures", w), w + "/failures")});
	}
	const json &failures = need_array(need(j, "failures", ""), "/failures");
	if (!failures.empty())
	{
		Field f = field_from_json(need(j, "field", ""), "/field");
		for (std::size_t i = 0; i < failures.size(); ++i)
		{
			std::string w = fmt::format("/failures/{}", i);
			const json &fj = failures[i];
			std::vector<std::size_t> witness;
			for (std::size_t k = 0; k < need_array(need(fj, "witness", w), w + "/witness").size(); ++k)
				witness.push_back(need_index(fj["witness"][k], fmt::format("{}/witness/{}", w, k)));
			std::vector<std::string> labels;
			for (std::size_t k = 0; k < need_array(need(fj, "labels", w), w + "/labels").size(); ++k)
				labels.push_back(need_string(fj["labels"][k], fmt::format("{}/labels/{}", w, k)));
			r.failures.push_back({need_string(need(fj, "axiom", w), w + "/axiom"), std::move(witness),
			                      std::move(labels), vector_from_json(need(fj, "lhs", w), f, w + "/lhs"),
			                      vector_from_json(need(fj, "rhs", w), f, w + "/rhs")});
		}
	}
	if (auto it = j.find("passed"); it != j.end() && it->is_boolean() && it->get<bool>() != r.passed())
		fail("/passed", "verdict disagrees with the axiom counts");
	return r;
}

json record_to_json(const ConstructionRecord &r)
{
	json out;
	out["name"] = r.name;
	out["inputs"] = r.inputs;
	out["scalars"] = r.scalars;
	out["operator_matrix"] = strings(r.operator_matrix);
	out["claimed_class"] = r.claimed_class.tag();
	out["verified"] = r.verified;
	out["report"] = r.report ? report_to_json(*r.report) : json(nullptr);
	out["notes"] = r.notes;
	return out;
}

json audit_to_json(const std::vector<AuditItem> &items, std::uint64_t seed)
{
	json out;
	out["seed"] = seed;
	json list = json::array();
	for (const auto &it : items)
		list.push_back(json{{"construction", it.name},
		                    {"input", it.input},
		                    {"status", it.status},
		                    {"notes", it.notes},
		                    {"report", report_to_json(it.report)}});
	out["items"] = std::move(list);
	return out;
}

ModulePresentation module_from_json(const json &j, const std::filesystem::path &base_dir)
{
	const json &aj = need(j, "algebra", "");
	AlgebraPresentation a = aj.is_string() ? load_algebra(base_dir / aj.get<std::string>())
	                                       : located("/algebra", [&] { return algebra_from_json(aj); });
	std::string tag = need_string(need(j, "kind", ""), "/kind");
	ModuleKind kind = located("/kind", [&] { return parse_module_kind(tag); });
	GradedSpace carrier = space_from_json(need(need(j, "carrier", ""), "basis", "/carrier"), a.space().group(),
	                                      "/carrier/basis");
	ModulePresentation m(a, carrier, kind);
	const json &actions = need(j, "actions", "");
	if (!actions.is_object())
		fail("/actions", "expected an object");
	for (const auto &[sig, oj] : actions.items())
	{
		std::string w = "/actions/" + sig;
		auto sigs = module_signatures(kind);
		if (std::find(sigs.begin(), sigs.end(), sig) == sigs.end())
			fail(w, fmt::format("signature \"{}\" is not used by {}", sig, tag));
		MultiOp op = op_from_json(oj, slot_spaces(sig, a.space(), carrier), carrier, a.field(), w);
		located(w, [&] { m.set_action(sig, std::move(op)); });
	}
	for (const auto &sig : module_signatures(kind))
		if (!m.has_action(sig))
			fail("/actions", fmt::format("missing action \"{}\"", sig));
	if (auto it = j.find("label"); it != j.end())
		m.label = need_string(*it, "/label");
	return m;
}

json module_to_json(const ModulePresentation &m)
{
	json out;
	if (!m.label.empty())
		out["label"] = m.label;
	out["algebra"] = algebra_to_json(m.algebra());
	out["kind"] = module_kind_tag(m.kind());
	out["carrier"] = json{{"basis", space_to_json(m.carrier())}};
	json actions = json::object();
	for (const auto &[sig, op] : m.actions())
		actions[sig] = op_to_json(op);
	out["actions"] = std::move(actions);
	return out;
}

json read_json(const std::filesystem::path &path)
{
	std::ifstream in(path);
	if (!in)
		throw InputError(fmt::format("{}: cannot open file", path.string()));
	try
	{
		return json::parse(in);
	}
	catch (const json::parse_error &e)
	{
		throw InputError(fmt::format("{}: {}", path.string(), e.what()));
	}
}

void write_json(const std::filesystem::path &path, const json &j)
{
	std::ofstream out(path);
	if (!out)
		throw InputError(fmt::format("{}: cannot write file", path.string()));
	out << j.dump(2) << '\n';
}

namespace {

template <class F>
auto in_file(const std::filesystem::path &path, F &&f) -> decltype(f())
{
	try
	{
		return f();
	}
	catch (const InputError &e)
	{
		throw InputError(fmt::format("{}: {}", path.string(), e.what()));
	}
}

} // namespace

AlgebraPresentation load_algebra(const std::filesystem::path &path)
{
	json j = read_json(path);
	return in_file(path, [&] { return algebra_from_json(j); });
}

void save_algebra(const std::filesystem::path &path, const AlgebraPresentation &a,
                  const std::optional<ConstructionRecord> &record)
{
	json j = algebra_to_json(a);
	if (record)
		j["construction"] = record_to_json(*record);
	write_json(path, j);
}

ModulePresentation load_module(const std::filesystem::path &path)
{
	json j = read_json(path);
	return in_file(path, [&] { return module_from_json(j, path.parent_path()); });
}

LinearMap load_matrix(const std::filesystem::path &path, const AlgebraPresentation &a)
{
	json j = read_json(path);
	return in_file(path, [&] { return matrix_from_json(j, a.space(), a.field()); });
}

} // namespace calg::io
