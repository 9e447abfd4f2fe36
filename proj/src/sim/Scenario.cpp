// SPDX-License-Identifier: GPL-3.0

#include <tokenauditor/sim/Scenario.h>

#include <tokenauditor/corpus/Digest.h>

#include <json.hpp>

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

using namespace std;

namespace tokenauditor::sim
{

namespace
{

set<string> const c_forbiddenOps = {
	"selfdestruct", "pause", "unpause", "burnfrom", "mint", "setfee", "migrate", "deprecate", "upgrade"
};

struct Word
{
	string text;
	unsigned column;
};

vector<Word> splitWords(string const& _line)
{
	vector<Word> words;
	size_t i = 0;
	while (i < _line.size())
	{
		while (i < _line.size() && isspace(static_cast<unsigned char>(_line[i])))
			++i;
		if (i >= _line.size())
			break;
		size_t start = i;
		while (i < _line.size() && !isspace(static_cast<unsigned char>(_line[i])))
			++i;
		words.push_back({_line.substr(start, i - start), static_cast<unsigned>(start + 1)});
	}
	return words;
}

class LineParser
{
public:
	LineParser(vector<Word> _words, unsigned _line): m_words(move(_words)), m_line(_line) {}

	[[noreturn]] void fail(string const& _message, size_t _index) const
	{
		unsigned column = _index < m_words.size() ? m_words[_index].column :
			(m_words.empty() ? 1 : m_words.back().column + static_cast<unsigned>(m_words.back().text.size()));
		throw ScenarioError(
			"line " + to_string(m_line) + ", column " + to_string(column) + ": " + _message,
			m_line,
			column
		);
	}

	string const& word(size_t _index, string const& _what) const
	{
		if (_index >= m_words.size())
			fail("missing " + _what, _index);
		return m_words[_index].text;
	}

	uint64_t number(size_t _index, string const& _what) const
	{
		return parseNumber(word(_index, _what), _index, _what);
	}

	uint64_t parseNumber(string const& _text, size_t _index, string const& _what) const
	{
		uint64_t value = 0;
		auto [ptr, ec] = from_chars(_text.data(), _text.data() + _text.size(), value);
		if (_text.empty() || ec != errc() || ptr != _text.data() + _text.size())
			fail("expected a non-negative integer for " + _what + ", got '" + _text + "'", _index);
		return value;
	}

	string name(size_t _index, string const& _what) const
	{
		string const& text = word(_index, _what);
		bool valid = !text.empty() && (isalpha(static_cast<unsigned char>(text[0])) || text[0] == '_' || text[0] == '0');
		for (char c: text)
			valid = valid && (isalnum(static_cast<unsigned char>(c)) || c == '_');
		if (!valid)
			fail("invalid " + _what + " '" + text + "'", _index);
		return text;
	}

	void expectEnd(size_t _count) const
	{
		if (m_words.size() > _count)
			fail("unexpected argument '" + m_words[_count].text + "'", _count);
	}

	size_t size() const { return m_words.size(); }

private:
	vector<Word> m_words;
	unsigned m_line;
};

ScenarioEvent parseLine(string const& _text, unsigned _line)
{
	LineParser parser(splitWords(_text), _line);
	ScenarioEvent event;
	event.line = _line;

	string const& time = parser.word(0, "time");
	if (time.rfind("t=", 0) != 0)
		parser.fail("expected t=<seconds>", 0);
	event.time = parser.parseNumber(time.substr(2), 0, "time");
	event.principal = parser.name(1, "principal");
	event.opName = parser.word(2, "operation");
	string const& op = event.opName;

	if (op == "deploy")
	{
		event.op = OpKind::Deploy;
		event.amount = parser.number(3, "supply");
		for (size_t i = 4; i < parser.size(); ++i)
		{
			string const& option = parser.word(i, "option");
			size_t equals = option.find('=');
			string key = option.substr(0, equals);
			if (equals == string::npos)
				parser.fail("expected key=value, got '" + option + "'", i);
			uint64_t value = parser.parseNumber(option.substr(equals + 1), i, key);
			if (key == "delay" && value > 0)
				event.deployOptions.delay = value;
			else if (key == "window" && value > 0)
				event.deployOptions.window = value;
			else if (key == "cap_bps" && value > 0 && value <= 10000)
				event.deployOptions.capBps = value;
			else if (key == "cap" && value > 0)
				event.deployOptions.cap = value;
			else
				parser.fail("invalid deploy option '" + option + "'", i);
		}
	}
	else if (op == "transfer")
	{
		event.op = OpKind::Transfer;
		event.address = parser.name(3, "recipient");
		event.amount = parser.number(4, "amount");
		parser.expectEnd(5);
	}
	else if (op == "propose")
	{
		string const& kind = parser.word(3, "action kind");
		if (kind == "mint")
		{
			event.op = OpKind::ProposeMint;
			event.amount = parser.number(4, "amount");
		}
		else if (kind == "setfee")
		{
			event.op = OpKind::ProposeSetFee;
			event.address = parser.name(4, "fee address");
		}
		else if (kind == "migrate")
		{
			event.op = OpKind::ProposeMigrate;
			event.address = parser.name(4, "migration target");
		}
		else
			parser.fail("unknown action kind '" + kind + "' (expected mint, setfee or migrate)", 3);
		parser.expectEnd(5);
	}
	else if (op == "execute" || op == "cancel")
	{
		event.op = op == "execute" ? OpKind::Execute : OpKind::Cancel;
		event.actionId = parser.number(3, "action id");
		parser.expectEnd(4);
	}
	else if (op == "optin")
	{
		event.op = OpKind::OptIn;
		parser.expectEnd(3);
	}
	else if (op == "burn")
	{
		event.op = OpKind::Burn;
		event.amount = parser.number(3, "amount");
		parser.expectEnd(4);
	}
	else if (op == "probe")
	{
		event.op = OpKind::Probe;
		event.address = parser.name(3, "address");
		string const& outcome = parser.word(4, "probe outcome");
		if (outcome != "payable" && outcome != "nonpayable")
			parser.fail("expected payable or nonpayable, got '" + outcome + "'", 4);
		event.payable = outcome == "payable";
		parser.expectEnd(5);
	}
	else if (op == "tick")
	{
		event.op = OpKind::Tick;
		parser.expectEnd(3);
	}
	else if (c_forbiddenOps.count(op))
		// Arguments are irrelevant: the capability does not exist.
		event.op = OpKind::Forbidden;
	else
		parser.fail("unknown operation '" + op + "'", 2);
	return event;
}

nlohmann::ordered_json stateToJson(TokenState const& _state)
{
	using json = nlohmann::ordered_json;
	json balances = json::object();
	for (auto const& [account, amount]: _state.balances)
		balances[account] = amount;
	json pending = json::array();
	for (PendingAction const& action: _state.pending)
		pending.push_back({
			{"id", action.id},
			{"kind", actionKindName(action.kind)},
			{"amount", action.amount},
			{"address", action.address},
			{"proposed_at", action.proposedAt},
			{"executable_at", action.executableAt},
			{"status", actionStatusName(action.status)}
		});
	json migration = nullptr;
	if (_state.migration)
	{
		json credited = json::object();
		for (auto const& [account, amount]: _state.migration->credited)
			credited[account] = amount;
		migration = {
			{"target", _state.migration->target},
			{"opted_in", _state.migration->optedIn},
			{"credited", credited}
		};
	}
	json payable = json::object();
	for (auto const& [account, flag]: _state.payable)
		payable[account] = flag;
	return {
		{"deployed", _state.deployed},
		{"owner", _state.owner},
		{"balances", balances},
		{"total_supply", _state.totalSupply},
		{"pending", pending},
		{"params", {
			{"delay", _state.params.delay},
			{"window", _state.params.window},
			{"cap_bps", _state.params.capBps},
			{"mint_cap", _state.params.mintCap ? json(*_state.params.mintCap) : json(nullptr)}
		}},
		{"clock", _state.clock},
		{"window_start", _state.windowStart},
		{"window_cap", _state.windowCap},
		{"minted_this_window", _state.mintedThisWindow},
		{"fee_address", _state.feeAddress ? json(*_state.feeAddress) : json(nullptr)},
		{"migration", migration},
		{"payable", payable},
		{"next_action_id", _state.nextActionId}
	};
}

TokenState applyOperation(TokenState const& _state, ScenarioEvent const& _event, Params const& _defaults)
{
	switch (_event.op)
	{
	case OpKind::Deploy:
	{
		if (_state.deployed)
			throw SimulationError(ErrorCode::InvalidState, "token already deployed");
		Params params = _defaults;
		DeployOptions const& options = _event.deployOptions;
		if (options.delay)
			params.delay = *options.delay;
		if (options.window)
			params.window = *options.window;
		if (options.capBps)
			params.capBps = *options.capBps;
		if (options.cap)
			params.mintCap = *options.cap;
		TokenState deployed = deploy(_event.principal, _event.amount, params, _event.time);
		deployed.payable = _state.payable;
		return deployed;
	}
	case OpKind::Transfer:
		return transfer(_state, _event.principal, _event.address, _event.amount);
	case OpKind::ProposeMint:
		return propose(_state, _event.principal, ActionKind::MintToOwner, _event.amount, {});
	case OpKind::ProposeSetFee:
		return propose(_state, _event.principal, ActionKind::SetFeeAddress, 0, _event.address);
	case OpKind::ProposeMigrate:
		return propose(_state, _event.principal, ActionKind::AnnounceMigration, 0, _event.address);
	case OpKind::Execute:
		return execute(_state, _event.actionId);
	case OpKind::Cancel:
		return cancel(_state, _event.principal, _event.actionId);
	case OpKind::OptIn:
		return optInMigration(_state, _event.principal);
	case OpKind::Burn:
		return burnSelf(_state, _event.principal, _event.amount);
	case OpKind::Probe:
		return recordProbe(_state, _event.address, _event.payable);
	case OpKind::Tick:
		return _state;
	case OpKind::Forbidden:
		throw SimulationError(ErrorCode::CapabilityAbsent, "the token has no '" + _event.opName + "' capability");
	}
	throw SimulationError(ErrorCode::InvalidState, "unhandled operation");
}

}

Scenario parseScenario(string const& _text)
{
	Scenario scenario;
	istringstream in(_text);
	string raw;
	unsigned lineNumber = 0;
	while (getline(in, raw))
	{
		++lineNumber;
		string line = raw.substr(0, raw.find('#'));
		if (splitWords(line).empty())
			continue;
		ScenarioEvent event = parseLine(line, lineNumber);
		if (scenario.events.empty() && event.op != OpKind::Deploy)
			throw ScenarioError("line " + to_string(lineNumber) + ", column 1: the first event must be a deploy", lineNumber, 1);
		scenario.events.push_back(move(event));
	}
	return scenario;
}

string formatEvent(ScenarioEvent const& _event)
{
	string text = "t=" + to_string(_event.time) + " " + _event.principal + " ";
	switch (_event.op)
	{
	case OpKind::Deploy:
		text += "deploy " + to_string(_event.amount);
		if (_event.deployOptions.delay)
			text += " delay=" + to_string(*_event.deployOptions.delay);
		if (_event.deployOptions.window)
			text += " window=" + to_string(*_event.deployOptions.window);
		if (_event.deployOptions.capBps)
			text += " cap_bps=" + to_string(*_event.deployOptions.capBps);
		if (_event.deployOptions.cap)
			text += " cap=" + to_string(*_event.deployOptions.cap);
		break;
	case OpKind::Transfer: text += "transfer " + _event.address + " " + to_string(_event.amount); break;
	case OpKind::ProposeMint: text += "propose mint " + to_string(_event.amount); break;
	case OpKind::ProposeSetFee: text += "propose setfee " + _event.address; break;
	case OpKind::ProposeMigrate: text += "propose migrate " + _event.address; break;
	case OpKind::Execute: text += "execute " + to_string(_event.actionId); break;
	case OpKind::Cancel: text += "cancel " + to_string(_event.actionId); break;
	case OpKind::OptIn: text += "optin"; break;
	case OpKind::Burn: text += "burn " + to_string(_event.amount); break;
	case OpKind::Probe: text += "probe " + _event.address + (_event.payable ? " payable" : " nonpayable"); break;
	case OpKind::Tick: text += "tick"; break;
	case OpKind::Forbidden: text += _event.opName; break;
	}
	return text;
}

string formatScenario(Scenario const& _scenario)
{
	string text;
	for (ScenarioEvent const& event: _scenario.events)
		text += formatEvent(event) + "\n";
	return text;
}

TokenState const& Trace::finalState() const
{
	static TokenState const empty;
	return steps.empty() ? empty : steps.back().after;
}

string canonicalState(TokenState const& _state)
{
	return stateToJson(_state).dump();
}

TraceStep step(TokenState const& _state, ScenarioEvent const& _event, Params const& _defaults, string const& _previousDigest)
{
	TraceStep result;
	result.event = _event;
	result.before = _state;
	result.after = _state;
	try
	{
		result.after = advanceClock(_state, _event.time);
		result.after = applyOperation(result.after, _event, _defaults);
		result.applied = true;
	}
	catch (SimulationError const& _error)
	{
		result.error = _error.code;
		result.message = _error.what();
	}
	result.digest = corpus::sha256Hex(_previousDigest + canonicalState(result.after));
	return result;
}

Trace runScenario(Scenario const& _scenario, Params const& _defaults)
{
	Trace trace;
	trace.defaults = _defaults;
	TokenState state;
	string digest;
	for (ScenarioEvent const& event: _scenario.events)
	{
		trace.steps.push_back(step(state, event, _defaults, digest));
		state = trace.steps.back().after;
		digest = trace.steps.back().digest;
	}
	return trace;
}

}
