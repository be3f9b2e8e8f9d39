from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    # Read IFC_* variables from the environment and .env
    threads: int = 1
    log_level: str = "INFO"

    model_config = SettingsConfigDict(env_file=".env", env_prefix="IFC_", extra="ignore")

    @property
    def workers(self) -> int:
        return max(1, self.threads)


settings = Settings()
