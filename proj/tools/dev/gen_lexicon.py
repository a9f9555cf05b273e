#!/usr/bin/env python3
"""Regenerates data/lexicon_default.json (the bundled 127-term lexicon).

Terms are drawn from publicly documented jailbreak/prompt-injection
vocabulary and OWASP LLM terminology. Weights: 1.5 = operational attack
phrasing, 1.0 = attack vocabulary, 0.6 = contextual security vocabulary.
"""
import json
import os

HIGH = [
    "jailbreak", "jailbroken", "dan", "do anything now",
    "prompt injection", "system prompt", "ignore previous instructions",
    "ignore all instructions", "developer mode", "bypass filter",
    "bypass safety", "unrestricted mode", "no restrictions",
    "without restrictions", "disable safety", "uncensored",
    "override instructions", "forget your instructions",
    "refusal suppression", "token smuggling", "payload splitting",
    "prompt leak", "prompt leaking", "hidden instructions",
    "instruction override", "skeleton key", "grandma exploit",
    "evil confidant", "opposite day", "masterkey", "crescendo",
    "many shot", "adversarial suffix", "sandbox escape",
]

MEDIUM = [
    "bypass", "circumvent", "circumvention", "evade", "evasion",
    "exploit", "exploitation", "vulnerability", "vulnerabilities",
    "payload", "injection", "injected", "malicious prompt",
    "malicious input", "attack vector", "attack surface",
    "adversarial prompt", "prompt hacking", "roleplay", "persona",
    "pretend you are", "act as", "hypothetical scenario",
    "hypothetically", "simulate", "simulation", "system message",
    "guardrail", "guardrails", "content policy", "content filter",
    "safety filter", "safety guidelines", "base64", "rot13", "hex",
    "url encoding", "unicode", "zero width", "obfuscation",
    "obfuscated", "encode", "encoded", "decode", "decoding", "cipher",
    "leetspeak", "morse", "binary", "manipulation", "manipulate",
    "social engineering", "phishing", "malware", "ransomware",
    "keylogger", "exfiltration", "privilege escalation", "backdoor",
    "rootkit", "trojan", "botnet", "zero day", "waluigi", "sydney",
    "autodan", "gcg", "model extraction", "data poisoning",
    "training data extraction", "membership inference",
    "model inversion", "context switching", "multi turn",
    "delimiter escape", "prompt template", "system exfiltration",
]

LOW = [
    "red team", "red teaming", "alignment", "safety training",
    "llm security", "cve", "owasp", "insecure output handling",
    "excessive agency", "overreliance", "denial of service",
    "supply chain", "sensitive information disclosure",
    "insecure plugin", "context window", "instruction hierarchy",
]


def main():
    terms = [{"term": t, "weight": 1.5} for t in HIGH]
    terms += [{"term": t, "weight": 1.0} for t in MEDIUM]
    terms += [{"term": t, "weight": 0.6} for t in LOW]
    lowered = [t["term"].lower() for t in terms]
    if len(set(lowered)) != len(lowered):
        dupes = sorted({t for t in lowered if lowered.count(t) > 1})
        raise SystemExit(f"duplicate terms: {dupes}")
    if len(terms) != 127:
        raise SystemExit(f"expected 127 terms, got {len(terms)}")
    doc = {"version": 1, "terms": terms}
    out = os.path.join(os.path.dirname(__file__), "..", "..", "data",
                       "lexicon_default.json")
    with open(out, "w", encoding="utf-8") as fh:
        json.dump(doc, fh, ensure_ascii=False, indent=2)
        fh.write("\n")
    print(f"wrote {os.path.normpath(out)} ({len(terms)} terms)")


if __name__ == "__main__":
    main()
