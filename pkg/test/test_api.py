from unittest import TestCase

from hochschild.jobs.demos import DEMOS
from run.run_api import HochschildAPI


class TestHochschildAPI(TestCase):

    def setUp(self):
        self.client = HochschildAPI().app.test_client()

    def post_job(self, spec):
        return self.client.post("/api/jobs", json=spec)

    def test_list_demos(self):
        response = self.client.get("/api/demos")
        self.assertEqual(response.status_code, 200)
        demos = response.get_json()
        self.assertEqual([demo["name"] for demo in demos], ["E1", "E2", "E3", "E4", "E5"])
        self.assertEqual(demos[0]["prime"], 5)

    def test_post_and_fetch_job(self):
        response = self.post_job(dict(DEMOS["E3"], checks=["bg"]))
        self.assertEqual(response.status_code, 200)
        body = response.get_json()
        self.assertEqual(body["report"]["dims"]["bg"], [1, 1, 0, 0, 1, 1, 0])
        job_id = body["jobId"]

        self.assertIn(job_id, self.client.get("/api/jobs").get_json())
        fetched = self.client.get("/api/job", query_string={"jobId": job_id})
        self.assertEqual(fetched.status_code, 200)
        self.assertEqual(fetched.get_json()["checks"][0]["status"], "PASS")

    def test_invalid_job(self):
        response = self.post_job(dict(DEMOS["E1"], g1=0))
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.get_json()["field"], "g1")

    def test_job_body_must_be_json(self):
        response = self.client.post("/api/jobs", data="not json", content_type="text/plain")
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.get_json()["field"], "spec")

    def test_job_lookup_errors(self):
        self.assertEqual(self.client.get("/api/job").status_code, 400)
        self.assertEqual(self.client.get("/api/job", query_string={"jobId": "nope"}).status_code, 404)

    def test_unknown_demo(self):
        response = self.client.get("/api/demo", query_string={"name": "E9"})
        self.assertEqual(response.status_code, 400)
        self.assertEqual(response.get_json()["field"], "name")
