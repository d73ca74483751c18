import init, { evaluate, opposition_hexagon, count } from "./pkg/roughdial_wasm.js";

const $ = (id) => document.getElementById(id);

function show(el, f) {
  el.classList.remove("err");
  try {
    f();
  } catch (e) {
    el.classList.add("err");
    el.textContent = String(e);
  }
}

function runEval() {
  const out = $("eval-out");
  show(out, () => {
    const v = JSON.parse(evaluate($("blocks").value, $("expr").value));
    out.textContent = v.long + (v.type === "class" ? "\nmembers: " + v.members.join(" ") : "");
  });
}

function runHexagon() {
  const out = $("hex-out");
  show(out, () => {
    const h = JSON.parse(opposition_hexagon($("blocks").value, $("hex-x").value));
    const names = h.nodes.map((n) => n.name);
    const fig = {};
    for (const e of h.edges) fig[e.a + "/" + e.b] = fig[e.b + "/" + e.a] = e.figure;
    let html = "<table><tr><th></th>" + names.map((n) => `<th>${n}</th>`).join("") + "</tr>";
    for (const n of h.nodes) {
      html += `<tr><th>${n.name} = ${n.value}</th>`;
      for (const m of names) html += `<td>${n.name === m ? "" : fig[n.name + "/" + m]}</td>`;
      html += "</tr>";
    }
    html += "</table>";
    if (h.warning) html += `<p class="err">${h.warning}</p>`;
    out.innerHTML = html;
  });
}

function runCount() {
  const out = $("count-out");
  show(out, () => {
    const tags = JSON.parse(count($("seq").value, $("pairs").value, $("equiv").checked));
    out.textContent = tags.map((t) => `${t.element}:${t.tag}`).join("  ");
  });
}

await init();
$("eval-go").onclick = runEval;
$("hex-go").onclick = runHexagon;
$("count-go").onclick = runCount;
runEval();
runHexagon();
runCount();
