// Built by `wasm-pack build crates/web --target web --out-dir www/pkg`.
import init, { check, faces, normalize } from "./pkg/cubeline_web.js";

const $ = (id) => document.getElementById(id);

await init();

const show = (text) => { $("output").textContent = text; };
$("check").onclick = () => show(check($("source").value));
$("faces").onclick = () => show(faces($("source").value, $("name").value.trim()));
$("normalize").onclick = () => show(normalize($("source").value, $("term").value));
